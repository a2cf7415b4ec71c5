#include <cstdio>
#include <exception>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "heckezeta/certified_roots.hpp"
#include "heckezeta/error_bounds.hpp"
#include "heckezeta/errors.hpp"
#include "heckezeta/report_format.hpp"
#include "heckezeta/spectral.hpp"
#include "heckezeta/transfer_matrix.hpp"
#include "heckezeta/zeta_cache.hpp"

using nlohmann::json;

namespace {

struct CommonOpts {
    std::string w_spec = "3";
    long digits = 30;
    long prec_bits = 0;  // 0 = derive from digits
    std::string format = "text";
    std::string cache_path;
};

hz::PrecisionContext make_ctx(const CommonOpts& o) {
    if (o.prec_bits > 0) return hz::PrecisionContext::for_bits(o.prec_bits);
    return hz::PrecisionContext::for_digits(o.digits);
}

std::unique_ptr<hz::ZetaCache> open_cache(const CommonOpts& o) {
    if (o.cache_path.empty()) return nullptr;
    return std::make_unique<hz::ZetaCache>(o.cache_path);
}

// "re" or "re,im"
hz::Complex parse_point(const std::string& text, mpfr_prec_t prec) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        return hz::Complex(hz::Real(text, prec), hz::Real(prec));
    return hz::Complex(hz::Real(text.substr(0, comma), prec),
                       hz::Real(text.substr(comma + 1), prec));
}

void emit(const json& doc, const std::string& format) {
    if (format == "json") {
        std::printf("%s\n", doc.dump(2).c_str());
        return;
    }
    fail(hz::ErrorKind::DomainError, "unknown format '" + format + "'");
}

int run_eval(const CommonOpts& o, const std::string& s_text, long n, const std::string& eps_text,
             const std::string& basis_name) {
    hz::PrecisionContext ctx = make_ctx(o);
    auto cache = open_cache(o);
    hz::GroupParam w = hz::GroupParam::from_string(o.w_spec, ctx);
    hz::Complex s = parse_point(s_text, ctx.working_bits + 64);
    hz::MatrixBasis basis =
        basis_name == "plain" ? hz::MatrixBasis::Plain : hz::MatrixBasis::Symmetric;

    if (n <= 0) {
        hz::Real eps(eps_text.empty() ? "1e-30" : eps_text, 64);
        n = hz::choose_n(eps, s, w, ctx);
    }
    hz::FNValue f = hz::evaluate_fn(n, s, w, basis, ctx, cache.get());
    hz::ErrorBudget budget = hz::BoundContext(s, w, ctx).budget(n);

    if (o.format == "text") {
        std::printf("F_%ld(%s) = %s\n", n, s_text.c_str(),
                    hz::complex_to_sci(f.value, o.digits).c_str());
        std::printf("truncation bound: %s\n", hz::to_sci(budget.total, 6).c_str());
        std::printf("working bits: %ld\n", static_cast<long>(ctx.working_bits));
        return 0;
    }
    if (o.format == "csv") {
        std::printf("w,s,n,value,bound,bits\n");
        std::printf("%s,%s,%ld,%s,%s,%ld\n", o.w_spec.c_str(), s_text.c_str(), n,
                    hz::complex_to_sci(f.value, o.digits).c_str(),
                    hz::to_sci(budget.total, 6).c_str(), static_cast<long>(ctx.working_bits));
        return 0;
    }
    json doc{{"schema", hz::kReportSchema},
             {"command", "eval"},
             {"w", o.w_spec},
             {"s", s_text},
             {"n", n},
             {"basis", basis_name},
             {"value", hz::complex_to_sci(f.value, o.digits)},
             {"value_re_hex", hz::real_to_hex(f.value.re())},
             {"value_im_hex", hz::real_to_hex(f.value.im())},
             {"bound", hz::to_sci(budget.total, 6)},
             {"bits", static_cast<long>(ctx.working_bits)}};
    emit(doc, o.format);
    return 0;
}

int run_hausdorff(const CommonOpts& o) {
    auto cache = open_cache(o);
    hz::PrecisionContext pctx =
        hz::PrecisionContext::for_bits(hz::bits_for_digits(o.digits) + 256);
    hz::GroupParam w = hz::GroupParam::from_string(o.w_spec, pctx);
    hz::RootEnclosure enc = hz::bisect_delta(w, o.digits, cache.get());

    if (o.format == "text") {
        std::printf("delta(%s) = %s\n", o.w_spec.c_str(), enc.value.c_str());
        std::printf("enclosure: [%s, %s]\n", hz::to_fixed(enc.lo, o.digits + 3).c_str(),
                    hz::to_fixed(enc.hi, o.digits + 3).c_str());
        std::printf("steps: %ld   max truncation: %ld   max bits: %ld\n", enc.steps, enc.max_n,
                    static_cast<long>(enc.max_bits));
        return 0;
    }
    if (o.format == "csv") {
        std::printf("w,delta,lo,hi,digits,steps,max_n,max_bits\n");
        std::printf("%s,%s,%s,%s,%ld,%ld,%ld,%ld\n", o.w_spec.c_str(), enc.value.c_str(),
                    hz::to_fixed(enc.lo, o.digits + 3).c_str(),
                    hz::to_fixed(enc.hi, o.digits + 3).c_str(), enc.digits, enc.steps, enc.max_n,
                    static_cast<long>(enc.max_bits));
        return 0;
    }
    json doc{{"schema", hz::kReportSchema},
             {"command", "hausdorff"},
             {"w", o.w_spec},
             {"digits", enc.digits},
             {"delta", enc.value},
             {"lo", hz::to_fixed(enc.lo, o.digits + 3)},
             {"hi", hz::to_fixed(enc.hi, o.digits + 3)},
             {"steps", enc.steps},
             {"max_n", enc.max_n},
             {"max_bits", static_cast<long>(enc.max_bits)}};
    emit(doc, o.format);
    return 0;
}

int run_table(const CommonOpts& o, const std::vector<std::string>& w_list) {
    auto cache = open_cache(o);
    std::vector<hz::TableRow> rows = hz::hausdorff_table(w_list, o.digits, cache.get());

    if (o.format == "text") {
        for (const auto& r : rows)
            std::printf("%-8s %s\n", r.label.c_str(), r.enc.value.c_str());
        return 0;
    }
    if (o.format == "csv") {
        std::printf("w,delta,digits,steps,max_n,max_bits\n");
        for (const auto& r : rows)
            std::printf("%s,%s,%ld,%ld,%ld,%ld\n", r.label.c_str(), r.enc.value.c_str(),
                        r.enc.digits, r.enc.steps, r.enc.max_n,
                        static_cast<long>(r.enc.max_bits));
        return 0;
    }
    json arr = json::array();
    for (const auto& r : rows)
        arr.push_back(json{{"w", r.label},
                           {"delta", r.enc.value},
                           {"digits", r.enc.digits},
                           {"steps", r.enc.steps},
                           {"max_n", r.enc.max_n},
                           {"max_bits", static_cast<long>(r.enc.max_bits)}});
    json doc{{"schema", hz::kReportSchema}, {"command", "table"}, {"rows", arr}};
    emit(doc, o.format);
    return 0;
}

int run_ruelle(const CommonOpts& o, const std::vector<long>& ns) {
    hz::PrecisionContext ctx = make_ctx(o);
    auto cache = open_cache(o);
    hz::GroupParam w = hz::GroupParam::from_string(o.w_spec, ctx);

    bool all_ok = true;
    json arr = json::array();
    for (long n : ns) {
        hz::RuelleCheck rc = hz::ruelle_at_zero(n, w, ctx, cache.get());
        all_ok = all_ok && rc.within;
        if (o.format == "text") {
            std::printf("n=%-5ld F_n(0)=%-30s defect=%-14s tol=%-14s %s\n", rc.n,
                        hz::to_sci(rc.lhs, 20).c_str(), hz::to_sci(rc.defect, 3).c_str(),
                        hz::to_sci(rc.tolerance, 3).c_str(), rc.within ? "ok" : "FAIL");
        } else if (o.format == "csv") {
            if (n == ns.front()) std::printf("w,n,lhs,rhs,defect,tol,within\n");
            std::printf("%s,%ld,%s,%s,%s,%s,%d\n", o.w_spec.c_str(), rc.n,
                        hz::to_sci(rc.lhs, 20).c_str(), hz::to_sci(rc.rhs, 20).c_str(),
                        hz::to_sci(rc.defect, 3).c_str(), hz::to_sci(rc.tolerance, 3).c_str(),
                        rc.within ? 1 : 0);
        } else {
            arr.push_back(json{{"n", rc.n},
                               {"lhs", hz::to_sci(rc.lhs, 20)},
                               {"rhs", hz::to_sci(rc.rhs, 20)},
                               {"defect", hz::to_sci(rc.defect, 3)},
                               {"tol", hz::to_sci(rc.tolerance, 3)},
                               {"within", rc.within}});
        }
    }
    if (o.format != "text" && o.format != "csv") {
        json doc{{"schema", hz::kReportSchema},
                 {"command", "ruelle"},
                 {"w", o.w_spec},
                 {"checks", arr}};
        emit(doc, o.format);
    }
    if (!all_ok) fail(hz::ErrorKind::Undetermined, "ruelle identity outside tolerance");
    return 0;
}

int run_trivial(const CommonOpts& o, const std::vector<long>& ms, bool probe) {
    hz::PrecisionContext ctx = make_ctx(o);
    auto cache = open_cache(o);
    hz::GroupParam w = hz::GroupParam::from_string(o.w_spec, ctx);

    json arr = json::array();
    for (long m : ms) {
        hz::RankReport r = hz::rank_analysis(m, w, ctx, cache.get());
        double slope = 0, residual = 0;
        if (probe) {
            hz::OrderProbe p = hz::vanishing_order_probe(m, w, cache.get());
            slope = p.slope;
            residual = p.residual;
        }
        if (o.format == "text") {
            std::printf("m=%ld: rank %ld of %ld, zero order in [%ld, %ld]", r.m, r.rank, r.size,
                        r.order_min, r.order_max);
            if (probe) std::printf(", probe slope %.4f (residual %.4f)", slope, residual);
            std::printf("\n");
        } else if (o.format == "csv") {
            if (m == ms.front()) std::printf("w,m,size,rank,nullity,order_min,order_max%s\n",
                                             probe ? ",slope,residual" : "");
            std::printf("%s,%ld,%ld,%ld,%ld,%ld,%ld", o.w_spec.c_str(), r.m, r.size, r.rank,
                        r.nullity, r.order_min, r.order_max);
            if (probe) std::printf(",%.6f,%.6f", slope, residual);
            std::printf("\n");
        } else {
            json row{{"m", r.m},         {"size", r.size},
                     {"rank", r.rank},   {"nullity", r.nullity},
                     {"order_min", r.order_min}, {"order_max", r.order_max}};
            if (probe) {
                row["slope"] = slope;
                row["residual"] = residual;
            }
            arr.push_back(row);
        }
    }
    if (o.format != "text" && o.format != "csv") {
        json doc{{"schema", hz::kReportSchema},
                 {"command", "trivial"},
                 {"w", o.w_spec},
                 {"points", arr}};
        emit(doc, o.format);
    }
    return 0;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_w = true) {
    if (with_w)
        cmd->add_option("--w", o.w_spec, "group parameter (> 2, or '2pi')")
            ->envname("HECKEZETA_W");
    cmd->add_option("--digits", o.digits, "decimal digits of output / target")
        ->envname("HECKEZETA_DIGITS");
    cmd->add_option("--prec-bits", o.prec_bits, "working precision in bits (overrides --digits)")
        ->envname("HECKEZETA_PREC_BITS");
    cmd->add_option("--format", o.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->envname("HECKEZETA_FORMAT");
    cmd->add_option("--cache", o.cache_path, "zeta value cache file")
        ->envname("HECKEZETA_CACHE");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified Selberg zeta approximations for Hecke triangle groups"};
    app.require_subcommand(1);

    CommonOpts oe, oh, ot, orr, otr;
    std::string s_text = "0.75";
    long n = 0;
    std::string eps_text;
    std::string basis_name = "symmetric";
    std::vector<std::string> w_list;
    std::vector<long> ns{5, 20, 100};
    std::vector<long> ms{1, 2, 3};
    bool probe = false;
    int rc = 0;

    CLI::App* eval = app.add_subcommand("eval", "evaluate the finite determinant F_N(s)");
    add_common(eval, oe);
    eval->add_option("--s", s_text, "evaluation point, 're' or 're,im'")->required();
    eval->add_option("--n", n, "truncation size (0 = pick from --eps)");
    eval->add_option("--eps", eps_text, "target truncation bound when --n is omitted");
    eval->add_option("--basis", basis_name, "symmetric or plain")
        ->check(CLI::IsMember({"symmetric", "plain"}));
    eval->callback([&] { rc = run_eval(oe, s_text, n, eps_text, basis_name); });

    CLI::App* hd = app.add_subcommand("hausdorff", "certified dimension via bisection");
    add_common(hd, oh);
    hd->callback([&] { rc = run_hausdorff(oh); });

    CLI::App* tb = app.add_subcommand("table", "dimensions for a list of parameters");
    add_common(tb, ot, false);
    tb->add_option("--w", w_list, "comma separated parameter list")
        ->required()
        ->delimiter(',');
    tb->callback([&] { rc = run_table(ot, w_list); });

    CLI::App* ru = app.add_subcommand("ruelle", "check F_n(0) = 2 F_{n-1}(1)");
    add_common(ru, orr);
    ru->add_option("--n", ns, "truncation sizes")->delimiter(',');
    ru->callback([&] { rc = run_ruelle(orr, ns); });

    CLI::App* tr = app.add_subcommand("trivial", "zero-order windows at s = -m");
    add_common(tr, otr);
    tr->add_option("--m", ms, "integer points to analyze")->delimiter(',');
    tr->add_flag("--probe", probe, "also fit the order from samples near -m");
    tr->callback([&] { rc = run_trivial(otr, ms, probe); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const hz::Error& e) {
        std::fprintf(stderr, "error [%s]: %s\n", hz::error_kind_name(e.kind()), e.what());
        return e.is_certification_failure() ? 3 : 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return rc;
}
