#include "triseq/cli.hpp"

#include <cstdlib>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "triseq/cf.hpp"
#include "triseq/dynamics.hpp"
#include "triseq/io.hpp"
#include "triseq/nest.hpp"
#include "triseq/triangle_map.hpp"
#include "triseq/uniqueness.hpp"

namespace triseq {

namespace {

using nlohmann::json;

json j_rat(const BigRational& r) { return rational_to_string(r); }

json j_digit(const BigInt& d) {
    if (d <= std::numeric_limits<long long>::max())
        return static_cast<long long>(d);
    return d.str();
}

json j_digits(const std::vector<BigInt>& ds) {
    json a = json::array();
    for (const BigInt& d : ds) a.push_back(j_digit(d));
    return a;
}

json j_point(const RationalPoint& p) {
    return json{{"x", j_rat(p.x)}, {"y", j_rat(p.y)}};
}

SearchBudget budget_from_env() {
    SearchBudget b;
    if (const char* env = std::getenv("TRISEQ_BUDGET")) {
        try {
            const long v = std::stol(env);
            if (v < 4) throw ParseError("TRISEQ_BUDGET too small");
            b.max_prefix = static_cast<std::size_t>(v);
        } catch (const std::logic_error&) {
            throw ParseError("TRISEQ_BUDGET must be an integer");
        }
    }
    return b;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

struct Ambiguity {
    std::size_t step;
};

void cmd_expand(std::ostream& out, const std::string& point_s,
                const std::string& interval_s, std::size_t depth,
                const std::string& format) {
    if (point_s.empty() == interval_s.empty())
        throw ParseError("need exactly one of --point and --interval");

    if (!interval_s.empty()) {
        auto res = expand_interval(parse_interval(interval_s), depth);
        if (std::holds_alternative<Ambiguous>(res))
            throw Ambiguity{std::get<Ambiguous>(res).step};
        const TriSequence& seq = std::get<TriSequence>(res);
        json j{{"digits", j_digits(seq.digits)}, {"terminated", seq.terminated()}};
        emit(out, j);
        return;
    }

    RationalPoint p = parse_point(point_s);
    TriSequence seq = expand(p, depth);
    std::vector<BigRational> d_trace;
    TriSequence check = digits_from_dots(p, depth, &d_trace);
    if (check.digits != seq.digits)
        throw ConsistencyFailure("dot-product digits disagree with expansion");

    if (format == "csv") {
        out << "index,digit,d\n";
        for (std::size_t i = 0; i < seq.digits.size(); ++i) {
            out << i << ',' << seq.digits[i] << ','
                << (i < d_trace.size() ? rational_to_string(d_trace[i]) : "")
                << "\n";
        }
        return;
    }
    json j{{"digits", j_digits(seq.digits)}, {"terminated", seq.terminated()}};
    json trace = json::array();
    for (const BigRational& d : d_trace) trace.push_back(j_rat(d));
    j["d_trace"] = trace;
    if (seq.terminated_at) j["terminated_at"] = *seq.terminated_at;
    if (seq.terminal_point) j["terminal_point"] = j_point(*seq.terminal_point);
    emit(out, j);
}

void cmd_vertices(std::ostream& out, const std::string& seq_s,
                  const std::string& format) {
    TriSequence seq = parse_digits(seq_s);
    if (seq.digits.empty()) throw ParseError("--seq must hold at least one digit");

    std::vector<std::array<RationalPoint, 3>> rows;
    for (std::size_t len = 1; len <= seq.digits.size(); ++len) {
        std::vector<BigInt> prefix(seq.digits.begin(),
                                   seq.digits.begin() + static_cast<long>(len));
        rows.push_back(triangle_vertices(prefix).vertices);
    }

    if (format == "svg") {
        const double s = 1024.0;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1024 "
               "1024\">\n";
        auto px = [&](const RationalPoint& p) {
            return svg_float(to_double(p.x) * s) + "," +
                   svg_float((1.0 - to_double(p.y)) * s);
        };
        out << "  <polygon points=\"0," << svg_float(s) << " " << svg_float(s)
            << "," << svg_float(s) << " " << svg_float(s) << ",0\" fill=\"none\" "
               "stroke=\"#999\"/>\n";
        for (const auto& v : rows) {
            out << "  <polygon points=\"" << px(v[0]) << " " << px(v[1]) << " "
                << px(v[2]) << "\" fill=\"none\" stroke=\"#000\"/>\n";
        }
        out << "</svg>\n";
        return;
    }
    if (format == "csv") {
        out << "prefix_len,v0x,v0y,v1x,v1y,v2x,v2y\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& v = rows[i];
            out << (i + 1);
            for (const auto& p : v)
                out << ',' << rational_to_string(p.x) << ','
                    << rational_to_string(p.y);
            out << "\n";
        }
        return;
    }
    json j = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        json verts = json::array();
        for (const auto& p : rows[i]) verts.push_back(j_point(p));
        j.push_back(json{{"prefix_len", i + 1}, {"vertices", verts}});
    }
    emit(out, j);
}

void cmd_classify(std::ostream& out, const std::string& family_s,
                  std::size_t depth, const std::string& threshold_s) {
    SequenceFamily fam = parse_family(family_s);
    ClassificationReport rep =
        classify(fam, depth, parse_rational(threshold_s));
    json ev = json::array();
    for (const Evidence& e : rep.evidence)
        ev.push_back(json{{"rule", e.rule}, {"bound", e.bound}});
    emit(out, json{{"family", fam.name()},
                   {"verdict", to_string(rep.verdict)},
                   {"depth", rep.depth},
                   {"zero_count", rep.zero_count},
                   {"partial_product", j_rat(rep.partial_product)},
                   {"evidence", ev}});
}

void cmd_segment(std::ostream& out, const std::string& family_s,
                 const std::string& seq_s, std::size_t depth) {
    if (family_s.empty() == seq_s.empty())
        throw ParseError("need exactly one of --family and --seq");
    TriSequence seq;
    if (!family_s.empty()) {
        seq.digits = parse_family(family_s).digits(depth);
    } else {
        seq = parse_digits(seq_s);
        if (!seq.terminated()) depth = std::min(depth, seq.digits.size());
    }
    LimitEstimate est = limit_estimate(seq, depth);
    if (std::holds_alternative<PointEstimate>(est)) {
        const auto& pe = std::get<PointEstimate>(est);
        emit(out, json{{"kind", "point"},
                       {"point", j_point(pe.point)},
                       {"enclosure_radius2", j_rat(pe.enclosure_radius2)},
                       {"exact", pe.exact}});
        return;
    }
    const auto& se = std::get<SegmentEstimate>(est);
    emit(out, json{{"kind", "segment"},
                   {"even_limit", j_point(se.even_limit)},
                   {"odd_limit", j_point(se.odd_limit)},
                   {"gap2", j_rat(se.gap2)},
                   {"even_residual2", j_rat(se.even_residual2)},
                   {"odd_residual2", j_rat(se.odd_residual2)},
                   {"length_lower_bound", se.length_lower_bound}});
}

void cmd_cf(std::ostream& out, const std::string& alpha_s) {
    const BigRational alpha = parse_rational(alpha_s);
    CFExpansion a = cf_expand(alpha, 100000);
    CFExpansion b = cf_geometric(alpha, 100000);
    if (a.digits != b.digits)
        throw ConsistencyFailure("geometric digits disagree with Gauss map");
    const BigRational back = cf_value(a.digits);
    if (back != alpha)
        throw ConsistencyFailure("expansion did not reconstruct its input");
    emit(out, json{{"digits", j_digits(a.digits)},
                   {"reconstructed", j_rat(back)}});
}

void cmd_ball(std::ostream& out, const std::string& center_s,
              const std::string& eps_s, bool edge_only) {
    const Ball ball{parse_point(center_s), parse_rational(eps_s)};
    const SearchBudget budget = budget_from_env();
    if (edge_only) {
        TriSequence prefix = edge_through_ball(ball, budget);
        XState xs = x_vectors(prefix.digits);
        const long n = xs.max_index();
        const RationalPoint a = hat(xs.at(n - 1));
        const RationalPoint b = farey_sum(xs.at(n), xs.at(n - 2));
        emit(out, json{{"prefix", j_digits(prefix.digits)},
                       {"edge", json::array({j_point(a), j_point(b)})},
                       {"meets_ball",
                        segment_dist2(a, b, ball.center) < ball.radius2()}});
        return;
    }
    PartitionTriangle tri = find_partition_triangle_in_ball(ball, budget);
    json verts = json::array();
    bool contained = true;
    for (const RationalPoint& v : tri.vertices) {
        verts.push_back(j_point(v));
        contained = contained && dist2(v, ball.center) < ball.radius2();
    }
    emit(out, json{{"prefix", j_digits(tri.prefix)},
                   {"vertices", verts},
                   {"contained", contained}});
}

void cmd_mixing(std::ostream& out, const std::string& a_s,
                const std::string& b_s, std::size_t gap, std::size_t samples) {
    const TriSequence a = parse_digits(a_s);
    const TriSequence b = parse_digits(b_s);
    MixingWitness w = mixing_witness(a.digits, b.digits, gap, samples);
    json js = json::array();
    for (const MixingSample& s : w.samples)
        js.push_back(json{{"point", j_point(s.point)}, {"passed", s.passed}});
    emit(out, json{{"prefix_a", j_digits(w.prefix_a.digits)},
                   {"prefix_b", j_digits(w.prefix_b.digits)},
                   {"gap", w.gap},
                   {"power", w.power},
                   {"concatenated", j_digits(w.concatenated.digits)},
                   {"samples", js},
                   {"all_passed", w.all_passed}});
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact triangle-map continued fraction toolkit"};
    app.require_subcommand(1);

    std::string point_s, interval_s, seq_s, family_s, center_s, eps_s, a_s, b_s;
    std::string format = "json";
    std::string threshold_s = "1/1000000";
    std::string alpha_s;
    std::size_t depth = 40;
    std::size_t max_terms = 64;
    std::size_t gap = 0;
    std::size_t samples = 25;
    bool edge_only = false;

    CLI::App* expand_c = app.add_subcommand("expand", "triangle digit expansion");
    expand_c->add_option("--point", point_s);
    expand_c->add_option("--interval", interval_s);
    expand_c->add_option("--depth", max_terms);
    expand_c->add_option("--format", format)
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* vertices_c =
        app.add_subcommand("vertices", "partition triangle vertices");
    vertices_c->add_option("--seq", seq_s)->required();
    vertices_c->add_option("--format", format)
        ->check(CLI::IsMember({"json", "csv", "svg"}));

    CLI::App* classify_c =
        app.add_subcommand("classify", "uniqueness classification");
    classify_c->add_option("--family", family_s)->required();
    classify_c->add_option("--depth", depth);
    classify_c->add_option("--threshold", threshold_s);

    CLI::App* segment_c = app.add_subcommand("segment", "limit estimation");
    segment_c->add_option("--family", family_s);
    segment_c->add_option("--seq", seq_s);
    segment_c->add_option("--depth", depth);

    CLI::App* cf_c = app.add_subcommand("cf", "classical continued fraction");
    cf_c->add_option("--alpha", alpha_s)->required();

    CLI::App* ball_c = app.add_subcommand("ball", "density constructions");
    ball_c->add_option("--center", center_s)->required();
    ball_c->add_option("--eps", eps_s)->required();
    ball_c->add_flag("--edge", edge_only);

    CLI::App* mixing_c = app.add_subcommand("mixing", "mixing witness");
    mixing_c->add_option("--a", a_s);
    mixing_c->add_option("--b", b_s);
    mixing_c->add_option("--gap", gap);
    mixing_c->add_option("--samples", samples);

    std::vector<std::string> argv_s;
    argv_s.reserve(args.size() + 1);
    argv_s.push_back("triseq");
    argv_s.insert(argv_s.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const std::string& s : argv_s) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (expand_c->parsed())
            cmd_expand(out, point_s, interval_s, max_terms, format);
        else if (vertices_c->parsed())
            cmd_vertices(out, seq_s, format);
        else if (classify_c->parsed())
            cmd_classify(out, family_s, depth, threshold_s);
        else if (segment_c->parsed())
            cmd_segment(out, family_s, seq_s, depth);
        else if (cf_c->parsed())
            cmd_cf(out, alpha_s);
        else if (ball_c->parsed())
            cmd_ball(out, center_s, eps_s, edge_only);
        else if (mixing_c->parsed())
            cmd_mixing(out, a_s, b_s, gap, samples);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    } catch (const Ambiguity& a) {
        emit(out, json{{"ambiguous", true}, {"step", a.step}});
        return 3;
    } catch (const NotFound& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const ConsistencyFailure& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace triseq
