#include "cli.hpp"

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "quadgen/construct.hpp"
#include "quadgen/parallel.hpp"
#include "quadgen/reduced.hpp"
#include "quadgen/search.hpp"

namespace quadgen::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { csv, json };

struct Context {
    Format format;
    unsigned jobs;
    std::ostream& out;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) parts.push_back(cur);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

i64 parse_int(const std::string& text, const char* what) {
    const Rational r = Rational::parse(text);
    if (r.den() != 1) throw validation_error(std::string(what) + " must be an integer: '" + text + "'");
    return r.num();
}

QuadPoly parse_triple(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 3) throw validation_error("expected a,b,c but got '" + text + "'");
    return QuadPoly(parse_int(parts[0], "a"), parse_int(parts[1], "b"), parse_int(parts[2], "c"));
}

HyperRect parse_rect(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 4) throw validation_error("expected --rect x0,x1,y0,y1 but got '" + text + "'");
    HyperRect r{Rational::parse(parts[0]), Rational::parse(parts[1]), Rational::parse(parts[2]),
                Rational::parse(parts[3])};
    r.validate();
    return r;
}

std::string join_csv(std::initializer_list<std::string> fields) {
    std::string line;
    bool first = true;
    for (const auto& f : fields) {
        if (!first) line += ',';
        line += f;
        first = false;
    }
    return line;
}

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

json triple_json(const QuadPoly& f) {
    return json::array({f.a(), f.b(), f.c()});
}

json envelope(const std::string& command, json inputs) {
    json j;
    j["command"] = command;
    j["format_version"] = kFormatVersion;
    j["inputs"] = std::move(inputs);
    return j;
}

void emit(const Context& ctx, const json& j) {
    ctx.out << j.dump(2) << '\n';
}

int cmd_verify(const Context& ctx, i64 D, const std::string& triple) {
    const QuadPoly f = parse_triple(triple);
    const auto split_d = field_disc_and_index(f);
    const bool ok = is_fundamental(D) && split_d.D.value() == D;
    if (ctx.format == Format::json) {
        json j = envelope("hmin", {{"D", D}, {"verify", triple_json(f)}});
        j["rows"] = json::array({{{"a", f.a()},
                                  {"b", f.b()},
                                  {"c", f.c()},
                                  {"field_discriminant", split_d.D.value()},
                                  {"index", split_d.m},
                                  {"generator", ok}}});
        emit(ctx, j);
    } else {
        ctx.out << "D,a,b,c,field_discriminant,index,generator\n";
        ctx.out << join_csv({std::to_string(D), std::to_string(f.a()), std::to_string(f.b()), std::to_string(f.c()),
                             std::to_string(split_d.D.value()), std::to_string(split_d.m), ok ? "true" : "false"})
                << '\n';
    }
    return ok ? kOk : kValidation;
}

int cmd_hmin(const Context& ctx, i64 d, bool reduced) {
    const FundamentalDiscriminant D(d);
    if (reduced && D.imaginary()) throw validation_error("--reduced needs a positive discriminant");
    const HminResult r = reduced ? hmin_reduced(D) : hmin(D);
    const std::string ratio = format_ratio(r.H, D.abs());
    if (ctx.format == Format::json) {
        json j = envelope("hmin", {{"D", d}, {"reduced", reduced}});
        json ws = json::array();
        for (const auto& w : r.witnesses) ws.push_back(triple_json(w));
        j["rows"] = json::array({{{"D", d}, {"H", r.H}, {"ratio", ratio}, {"witnesses", ws}}});
        emit(ctx, j);
    } else {
        ctx.out << "D,H,ratio,a,b,c\n";
        for (const auto& w : r.witnesses) {
            ctx.out << join_csv({std::to_string(d), std::to_string(r.H), ratio, std::to_string(w.a()),
                                 std::to_string(w.b()), std::to_string(w.c())})
                    << '\n';
        }
    }
    return kOk;
}

int cmd_scan(const Context& ctx, i64 lo, i64 hi, const std::string& kind_text, std::optional<i64> window) {
    if (lo >= hi) throw validation_error("scan needs lo < hi");
    ScanKind kind;
    if (kind_text == "generator") {
        kind = ScanKind::generator;
    } else if (kind_text == "reduced") {
        kind = ScanKind::reduced;
    } else {
        throw validation_error("--kind must be generator or reduced");
    }
    std::vector<ScanRow> rows;
    if (window) {
        rows = scan_windows(lo, hi, *window, kind, ctx.jobs);
    } else {
        rows.push_back(scan_max_ratio(lo, hi, kind, ctx.jobs));
    }

    if (ctx.format == Format::json) {
        json inputs = {{"lo", lo}, {"hi", hi}, {"kind", to_string(kind)}};
        inputs["window"] = window ? json(*window) : json(nullptr);
        json j = envelope("scan", inputs);
        j["rows"] = json::array();
        for (const auto& r : rows) {
            j["rows"].push_back({{"window_lo", r.window_lo},
                                 {"window_hi", r.window_hi},
                                 {"D", r.D},
                                 {"triple", triple_json(r.triple)},
                                 {"H", r.H},
                                 {"ratio", r.ratio_text()},
                                 {"average", r.average ? json(r.average_text()) : json(nullptr)}});
        }
        emit(ctx, j);
    } else {
        ctx.out << "window_lo,window_hi,D,a,b,c,ratio,average\n";
        for (const auto& r : rows) {
            ctx.out << join_csv({std::to_string(r.window_lo), std::to_string(r.window_hi), std::to_string(r.D),
                                 std::to_string(r.triple.a()), std::to_string(r.triple.b()),
                                 std::to_string(r.triple.c()), r.ratio_text(), r.average_text()})
                    << '\n';
        }
    }
    return kOk;
}

int cmd_meps(const Context& ctx, i64 limit, const std::string& eps_text) {
    if (limit < 5) throw validation_error("meps needs limit >= 5");
    const Rational eps = Rational::parse(eps_text);
    const auto exceptions = m_eps_exceptions(limit, eps, ctx.jobs);
    bool all_verified = true;
    std::vector<bool> verified;
    for (i64 d : exceptions) {
        verified.push_back(meps_exception_verified(d, eps));
        all_verified = all_verified && verified.back();
    }
    const i64 largest = exceptions.empty() ? 0 : exceptions.back();

    if (ctx.format == Format::json) {
        json j = envelope("meps", {{"limit", limit}, {"epsilon", eps.to_string()}});
        j["rows"] = json::array();
        for (std::size_t i = 0; i < exceptions.size(); ++i)
            j["rows"].push_back({{"D", exceptions[i]}, {"verified", static_cast<bool>(verified[i])}});
        j["summary"] = {{"count", exceptions.size()},
                        {"largest_exception", exceptions.empty() ? json(nullptr) : json(largest)},
                        {"all_verified", all_verified}};
        emit(ctx, j);
    } else {
        ctx.out << "D,verified\n";
        for (std::size_t i = 0; i < exceptions.size(); ++i)
            ctx.out << exceptions[i] << ',' << (verified[i] ? "true" : "false") << '\n';
        ctx.out << "# count=" << exceptions.size() << " largest_exception="
                << (exceptions.empty() ? std::string("none") : std::to_string(largest)) << " epsilon=" << eps.to_string()
                << " limit=" << limit << " all_verified=" << (all_verified ? "true" : "false") << '\n';
    }
    return all_verified ? kOk : kInternal;
}

int cmd_duke(const Context& ctx, i64 lo, i64 hi, const std::string& rect_text) {
    if (lo > hi) throw validation_error("duke needs lo <= hi");
    if (hi >= 0) throw validation_error("duke needs negative discriminants (hi < 0)");
    const HyperRect rect = parse_rect(rect_text);
    const auto ds = fundamental_range(lo, hi);
    if (ds.empty()) throw validation_error("no fundamental discriminant in range");
    auto fn = [&rect](const FundamentalDiscriminant& D) { return duke_statistic(D, rect); };
    const auto counts = parallel_map<DukeCount>(std::span<const FundamentalDiscriminant>(ds), fn, ctx.jobs);

    long double sum = 0;
    for (const auto& c : counts) sum += static_cast<long double>(c.inside) / c.total;
    const double mean = static_cast<double>(sum / counts.size());
    const MuMeasure mu = mu_measure(rect);
    const double deviation = std::abs(mean - mu.value);

    if (ctx.format == Format::json) {
        json j = envelope("duke", {{"lo", lo}, {"hi", hi}, {"rect", rect_text}});
        j["rows"] = json::array();
        for (std::size_t i = 0; i < ds.size(); ++i) {
            j["rows"].push_back({{"D", ds[i].value()},
                                 {"size", counts[i].total},
                                 {"count_in", counts[i].inside},
                                 {"fraction", counts[i].fraction().to_string()}});
        }
        j["summary"] = {{"mean_fraction", fixed6(mean)},
                        {"mu", fixed6(mu.value)},
                        {"mu_times_pi", mu.times_pi.to_string()},
                        {"abs_deviation", fixed6(deviation)}};
        emit(ctx, j);
    } else {
        ctx.out << "D,size,count_in,fraction\n";
        for (std::size_t i = 0; i < ds.size(); ++i) {
            ctx.out << join_csv({std::to_string(ds[i].value()), std::to_string(counts[i].total),
                                 std::to_string(counts[i].inside),
                                 fixed6(static_cast<double>(counts[i].inside) / counts[i].total)})
                    << '\n';
        }
        ctx.out << "# mean_fraction=" << fixed6(mean) << " mu=" << fixed6(mu.value)
                << " mu_times_pi=" << mu.times_pi.to_string() << " abs_deviation=" << fixed6(deviation) << '\n';
    }
    return kOk;
}

int cmd_cycles(const Context& ctx, i64 d) {
    if (d <= 0) throw validation_error("cycles needs a positive discriminant, got " + std::to_string(d));
    const FundamentalDiscriminant D(d);
    const auto cs = cycles(D);
    if (ctx.format == Format::json) {
        json j = envelope("cycles", {{"D", d}});
        j["cycle_count"] = cs.size();
        j["rows"] = json::array();
        for (const auto& c : cs) {
            json pts = json::array();
            for (const auto& p : c) pts.push_back(json::array({p.a, p.b, p.c}));
            j["rows"].push_back({{"length", c.size()}, {"triples", pts}});
        }
        emit(ctx, j);
    } else {
        ctx.out << "cycle,position,a,b,c\n";
        for (std::size_t i = 0; i < cs.size(); ++i) {
            for (std::size_t k = 0; k < cs[i].size(); ++k) {
                const auto& p = cs[i][k];
                ctx.out << join_csv({std::to_string(i), std::to_string(k), std::to_string(p.a), std::to_string(p.b),
                                     std::to_string(p.c)})
                        << '\n';
            }
        }
    }
    return kOk;
}

struct Construction {
    std::string kind;
    std::string polynomial;
    std::string discriminant;
    i64 height;
    std::string certificate;
    std::vector<i64> coeffs;  // highest degree first
};

Construction quad_construction(const std::string& kind, const QuadPoly& f, std::string certificate) {
    return {kind, to_string(f), std::to_string(disc2(f)), height(f), std::move(certificate), {f.a(), f.b(), f.c()}};
}

Construction build_construction(const std::string& kind, const std::vector<std::string>& params,
                                const std::string& eps_text) {
    auto need = [&](std::size_t n) {
        if (params.size() != n)
            throw validation_error("construct " + kind + " expects " + std::to_string(n) + " parameter(s)");
    };
    if (kind == "lemma1") {
        need(1);
        const i64 d = parse_int(params[0], "d");
        const QuadPoly f = lemma1_integral(d);
        const i64 disc = disc2(f);
        // field discriminant is disc itself here
        return quad_construction(kind, f,
                                 "4H = " + std::to_string(4 * height(f)) + " >= |D| = " + std::to_string(-disc));
    }
    if (kind == "prop2") {
        need(1);
        const FundamentalDiscriminant D(parse_int(params[0], "D"));
        const QuadPoly f = prop2_generator(D);
        const i64 h = height(f);
        return quad_construction(kind, f,
                                 "H^2 = " + std::to_string(h * h) + " < D = " + std::to_string(D.value()));
    }
    if (kind == "lemma2") {
        need(1);
        const FundamentalDiscriminant D(parse_int(params[0], "D"));
        const Rational eps = Rational::parse(eps_text);
        const auto w = lemma2_generator(D, eps);
        if (!w) throw validation_error(std::to_string(D.value()) + " is not in M_eps for eps = " + eps.to_string());
        const i64 h = height(w->f);
        const Rational bound = (Rational(1) + Rational(2) * eps) * (Rational(1) + Rational(2) * eps) * Rational(D.value());
        return quad_construction(kind, w->f,
                                 "p = " + std::to_string(w->p) + "; 4H^2 = " + std::to_string(4 * h * h) +
                                     " <= (1+2eps)^2 D = " + bound.to_string());
    }
    if (kind == "family-im" || kind == "family-re") {
        need(1);
        const i64 m = parse_int(params[0], "m");
        const auto member = kind == "family-im" ? imaginary_family(m) : real_family(m);
        if (!member) throw validation_error("family member m = " + std::to_string(m) + " has a non-squarefree discriminant");
        const i64 h = height(member->f);
        return quad_construction(kind, member->f,
                                 "H/sqrt|D| = " + format_ratio(h, member->D.abs()) + " with D = " +
                                     std::to_string(member->D.value()));
    }
    if (kind == "degree-n") {
        need(3);
        const auto [f, cert] = degree_n_family(static_cast<int>(parse_int(params[0], "n")), parse_int(params[1], "p"),
                                               parse_int(params[2], "q"));
        std::vector<i64> coeffs(f.coeffs().rbegin(), f.coeffs().rend());
        return {kind,
                to_string(f),
                to_string(disc_n(f)),
                height(f),
                "q^2 = " + std::to_string(cert.q_squared) + (cert.holds ? " < " : " >= ") +
                    "2pq = " + std::to_string(cert.two_pq) + "; " + cert.conditional_bound,
                coeffs};
    }
    throw validation_error("unknown construction '" + kind +
                           "' (expected lemma1, prop2, lemma2, family-im, family-re, degree-n)");
}

int cmd_construct(const Context& ctx, const std::string& kind, const std::vector<std::string>& params,
                  const std::string& eps_text) {
    const Construction c = build_construction(kind, params, eps_text);
    if (ctx.format == Format::json) {
        json inputs = {{"kind", kind}, {"params", params}};
        if (kind == "lemma2") inputs["epsilon"] = eps_text;
        json j = envelope("construct", inputs);
        j["rows"] = json::array({{{"construction", c.kind},
                                  {"polynomial", c.polynomial},
                                  {"coefficients", c.coeffs},
                                  {"discriminant", c.discriminant},
                                  {"height", c.height},
                                  {"certificate", c.certificate}}});
        emit(ctx, j);
    } else {
        ctx.out << "construction,polynomial,discriminant,height,certificate\n";
        ctx.out << join_csv({c.kind, c.polynomial, c.discriminant, std::to_string(c.height), c.certificate}) << '\n';
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimal-height generators of quadratic fields", "quadgen"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_text;
    std::optional<unsigned> jobs;
    app.add_option("--format", format_text, "Output format: csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--jobs", jobs, "Worker threads (default: QUADGEN_JOBS or hardware concurrency)")
        ->check(CLI::PositiveNumber);

    i64 hmin_d = 0;
    bool hmin_reduced_flag = false;
    std::string verify_text;
    auto* hmin_cmd = app.add_subcommand("hmin", "Minimal generator height of Q(sqrt(D))");
    hmin_cmd->add_option("D", hmin_d, "Fundamental discriminant")->required();
    hmin_cmd->add_flag("--reduced", hmin_reduced_flag, "Minimise over reduced elements only (D > 0)");
    hmin_cmd->add_option("--verify", verify_text, "Check that a,b,c generates Q(sqrt(D)) instead of searching");

    i64 scan_lo = 0, scan_hi = 0;
    std::string scan_kind = "generator";
    std::optional<i64> scan_window;
    auto* scan_cmd = app.add_subcommand("scan", "Maximal H/sqrt|D| per window");
    scan_cmd->add_option("lo", scan_lo)->required();
    scan_cmd->add_option("hi", scan_hi)->required();
    scan_cmd->add_option("--kind", scan_kind, "generator or reduced");
    scan_cmd->add_option("--window", scan_window, "Window width; windows align to multiples of it");

    i64 meps_limit = 0;
    std::string eps_text = "0.1";
    auto* meps_cmd = app.add_subcommand("meps", "Fundamental D <= limit outside M_eps");
    meps_cmd->add_option("limit", meps_limit)->required();
    meps_cmd->add_option("--epsilon", eps_text, "epsilon in (0, 1/2], decimal or fraction");

    i64 duke_lo = 0, duke_hi = 0;
    std::string rect_text;
    auto* duke_cmd = app.add_subcommand("duke", "Fraction of reduced points in a rectangle");
    duke_cmd->add_option("lo", duke_lo)->required();
    duke_cmd->add_option("hi", duke_hi)->required();
    duke_cmd->add_option("--rect", rect_text, "x0,x1,y0,y1")->required();

    i64 cycles_d = 0;
    auto* cycles_cmd = app.add_subcommand("cycles", "rho-cycles of the reduced elements of D > 0");
    cycles_cmd->add_option("D", cycles_d)->required();

    std::string construct_kind;
    std::vector<std::string> construct_params;
    std::string construct_eps = "0.5";
    auto* construct_cmd = app.add_subcommand("construct", "Explicit generator constructions");
    construct_cmd->add_option("kind", construct_kind, "lemma1, prop2, lemma2, family-im, family-re, degree-n")
        ->required();
    construct_cmd->add_option("params", construct_params, "Construction parameters");
    construct_cmd->add_option("--epsilon", construct_eps, "epsilon for lemma2");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kValidation;
    }

    try {
        const auto* chosen = app.get_subcommands().front();
        Format format = chosen == cycles_cmd ? Format::json : Format::csv;
        if (!format_text.empty()) format = format_text == "json" ? Format::json : Format::csv;
        const Context ctx{format, resolve_jobs(jobs), out};

        if (chosen == hmin_cmd) {
            if (!verify_text.empty()) return cmd_verify(ctx, hmin_d, verify_text);
            return cmd_hmin(ctx, hmin_d, hmin_reduced_flag);
        }
        if (chosen == scan_cmd) return cmd_scan(ctx, scan_lo, scan_hi, scan_kind, scan_window);
        if (chosen == meps_cmd) return cmd_meps(ctx, meps_limit, eps_text);
        if (chosen == duke_cmd) return cmd_duke(ctx, duke_lo, duke_hi, rect_text);
        if (chosen == cycles_cmd) return cmd_cycles(ctx, cycles_d);
        if (chosen == construct_cmd) return cmd_construct(ctx, construct_kind, construct_params, construct_eps);
    } catch (const validation_error& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const arithmetic_overflow& e) {
        err << "overflow: " << e.what() << '\n';
        return kInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kInternal;
}

} // namespace quadgen::cli
