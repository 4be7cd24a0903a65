#include "ffrt/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffrt/errors.hpp"
#include "ffrt/fedder.hpp"
#include "ffrt/matfac.hpp"
#include "ffrt/monomial.hpp"
#include "ffrt/parse.hpp"
#include "ffrt/relmat.hpp"
#include "ffrt/signature.hpp"

namespace ffrt::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t kMatrixGuard = 1000000;

json rational_json(const BigRat& r) {
    return json{{"num", r.get_num().get_str()},
                {"den", r.get_den().get_str()},
                {"float", r.get_d()}};
}

std::string float_str(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

std::vector<Exp> parse_exponents(const std::string& text) {
    std::vector<Exp> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t begin = piece.find_first_not_of(" \t");
        if (begin != std::string::npos) {
            std::size_t end = piece.find_last_not_of(" \t");
            piece = piece.substr(begin, end - begin + 1);
            try {
                std::size_t used = 0;
                unsigned long v = std::stoul(piece, &used);
                if (used != piece.size()) throw usage_error("bad exponent '" + piece + "'");
                if (v == 0) throw usage_error("exponents must be >= 1");
                out.push_back(static_cast<Exp>(v));
            } catch (const std::invalid_argument&) {
                throw usage_error("bad exponent '" + piece + "'");
            } catch (const std::out_of_range&) {
                throw usage_error("exponent out of range '" + piece + "'");
            }
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw usage_error("empty exponent list");
    return out;
}

void guard_matrix_scale(std::uint64_t p, std::uint32_t e, std::size_t n, bool force) {
    BigInt size = big_pow(big_pow(p, e), n);
    if (!force && size > BigInt(kMatrixGuard)) {
        throw domain_error("q^n = " + size.get_str() + " exceeds " + std::to_string(kMatrixGuard) +
                           "; pass --force to proceed");
    }
}

std::optional<Exp> env_precision() {
    const char* raw = std::getenv("FFRT_PRECISION");
    if (!raw || !*raw) return std::nullopt;
    char* end = nullptr;
    unsigned long v = std::strtoul(raw, &end, 10);
    if (!end || *end != '\0' || v == 0) throw usage_error("FFRT_PRECISION must be a positive integer");
    return static_cast<Exp>(v);
}

std::string monomial_str(const Monomial& m, const RingPtr& ring) {
    return to_string(Poly::from_monomial(ring, m));
}

// ---- subcommand payloads ------------------------------------------------

struct RelmatArgs {
    std::uint64_t prime = 0;
    std::uint32_t level = 1;
    std::size_t vars = 1;
    std::string poly;
    std::string format = "json";
    bool force = false;
};

json relmat_json(const RelationMatrix& m, std::uint64_t p, std::uint32_t e, std::size_t n) {
    std::vector<std::tuple<std::size_t, std::size_t, std::string>> entries;
    m.mat().for_each_entry([&](std::size_t i, std::size_t j, const Poly& v) {
        entries.emplace_back(i, j, to_string(v));
    });
    std::sort(entries.begin(), entries.end());
    json out{{"p", p}, {"e", e}, {"n", n}, {"size", m.size()}};
    out["entries"] = json::array();
    for (const auto& [row, col, poly] : entries) {
        out["entries"].push_back(json{{"row", row}, {"col", col}, {"poly", poly}});
    }
    return out;
}

int run_relmat(const RelmatArgs& a, std::ostream& out) {
    Prime p(a.prime);
    guard_matrix_scale(p.value(), a.level, a.vars, a.force);
    RingPtr ring = Ring::make(p, a.vars);
    Poly f = parse_poly(a.poly, ring);
    RelationMatrix m = RelationMatrix::build(f, a.level);
    if (a.format == "text") {
        out << m.to_text();
    } else {
        out << relmat_json(m, p.value(), a.level, a.vars).dump(2) << "\n";
    }
    return 0;
}

struct CountArgs {
    std::uint64_t prime = 0;
    std::uint32_t level = 1;
    std::size_t vars = 1;
    std::string poly;
    std::uint64_t power = 1;
    std::uint32_t precision = 0; // 0 = use the default bound
    bool force = false;
};

int run_count(const CountArgs& a, std::ostream& out) {
    Prime p(a.prime);
    guard_matrix_scale(p.value(), a.level, a.vars, a.force);
    RingPtr ring = Ring::make(p, a.vars);
    Poly f = parse_poly(a.poly, ring);
    std::optional<Exp> precision = a.precision ? std::optional<Exp>(a.precision) : env_precision();
    SplitResult split = split_power_factorization(f, a.power, a.level, precision);
    json j{{"t", split.t},
           {"r", split.r},
           {"reduced_size", split.reduced_size},
           {"precision_used", split.precision_used}};
    out << j.dump(2) << "\n";
    return 0;
}

struct DecomposeArgs {
    std::uint64_t prime = 0;
    std::uint32_t level = 1;
    std::size_t vars = 1;
    std::string ideal;
    bool force = false;
};

int run_decompose(const DecomposeArgs& a, std::ostream& out) {
    Prime p(a.prime);
    guard_matrix_scale(p.value(), a.level, a.vars, a.force);
    RingPtr ring = Ring::make(p, a.vars);
    std::vector<Monomial> gens = parse_monomial_list(a.ideal, ring);
    IdealDecomposition dec = decompose_monomial_quotient(gens, p, a.level);
    json j;
    j["summands"] = json::array();
    for (const auto& [ideal, mult] : dec.multiplicities) {
        json gens_json = json::array();
        for (const Monomial& g : ideal) gens_json.push_back(monomial_str(g, ring));
        j["summands"].push_back(json{{"ideal", gens_json}, {"multiplicity", mult.get_ui()}});
    }
    j["total"] = dec.total.get_ui();
    out << j.dump(2) << "\n";
    return 0;
}

struct SignatureArgs {
    std::uint64_t prime = 0;
    std::string exponents;
    std::string poly;
    std::size_t vars = 1;
    std::uint32_t as_level = 1;
    std::uint32_t e_min = 1;
    std::uint32_t e_max = 6;
    std::uint32_t precision = 0; // 0 = use the default bound
    std::string format = "json";
};

void write_report(const SignatureReport& report, const std::string& variant, json header,
                  const std::string& format, std::ostream& out) {
    if (format == "csv") {
        out << "e,a_e,ratio_num,ratio_den,ratio_float\n";
        for (const SignatureEstimate& est : report.estimates) {
            out << est.e << "," << est.free_rank.get_str() << "," << est.ratio.get_num().get_str() << ","
                << est.ratio.get_den().get_str() << "," << float_str(est.ratio.get_d()) << "\n";
        }
        return;
    }
    json j = std::move(header);
    j["variant"] = variant;
    j["dimension"] = report.dimension;
    j["alpha"] = report.alpha;
    if (report.exact) j["exact"] = rational_json(*report.exact);
    j["estimates"] = json::array();
    for (const SignatureEstimate& est : report.estimates) {
        j["estimates"].push_back(json{{"e", est.e},
                                      {"a_e", est.free_rank.get_str()},
                                      {"ratio", rational_json(est.ratio)}});
    }
    out << j.dump(2) << "\n";
}

int run_signature_uv(const SignatureArgs& a, std::ostream& out) {
    Prime p(a.prime);
    std::vector<Exp> d = parse_exponents(a.exponents);
    SignatureReport report = signature_uv_empirical(d, p, a.e_min, a.e_max);
    write_report(report, "uv", json{{"p", p.value()}, {"exponents", d}}, a.format, out);
    return 0;
}

int run_signature_sharp(const SignatureArgs& a, std::ostream& out) {
    Prime p(a.prime);
    std::vector<Exp> d = parse_exponents(a.exponents);
    SignatureReport report = signature_plus_z2(d, p, a.e_min, a.e_max);
    write_report(report, "sharp", json{{"p", p.value()}, {"exponents", d}}, a.format, out);
    return 0;
}

int run_signature_as(const SignatureArgs& a, std::ostream& out) {
    Prime p(a.prime);
    RingPtr ring = Ring::make(p, a.vars);
    Poly f = parse_poly(a.poly, ring);
    std::optional<Exp> precision = a.precision ? std::optional<Exp>(a.precision) : env_precision();
    ArtinSchreierResult result = signature_artin_schreier(f, a.as_level, precision);

    BigInt a_d = big_pow(p.value(), a.as_level) * BigInt(static_cast<unsigned long>(result.free_rank));
    if (a.format == "csv") {
        out << "e,a_e,ratio_num,ratio_den,ratio_float\n";
        out << a.as_level << "," << a_d.get_str() << "," << result.signature.get_num().get_str() << ","
            << result.signature.get_den().get_str() << "," << float_str(result.signature.get_d()) << "\n";
        return 0;
    }
    json j{{"variant", "artin-schreier"},
           {"p", p.value()},
           {"d", a.as_level},
           {"vars", a.vars},
           {"poly", to_string(f)},
           {"dimension", a.vars},
           {"alpha", 0},
           {"block_free_rank", result.free_rank},
           {"a_d", a_d.get_str()},
           {"precision_used", result.precision_used},
           {"exact", rational_json(result.signature)}};
    out << j.dump(2) << "\n";
    return 0;
}

struct FpureArgs {
    std::uint64_t prime = 0;
    std::size_t vars = 1;
    std::string poly;
    std::string ideal;
};

int run_fpure(const FpureArgs& a, std::ostream& out) {
    Prime p(a.prime);
    RingPtr ring = Ring::make(p, a.vars);
    PurityVerdict verdict;
    if (!a.poly.empty()) {
        verdict = fedder_principal(parse_poly(a.poly, ring));
    } else {
        verdict = fedder_monomial_ideal(parse_monomial_list(a.ideal, ring), p);
    }
    json j{{"f_pure", verdict.f_pure}};
    j["witness"] = verdict.witness ? json(monomial_str(*verdict.witness, ring)) : json(nullptr);
    out << j.dump(2) << "\n";
    return 0;
}

// ---- reproduce ----------------------------------------------------------

std::string data_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("FFRT_DATA_DIR"); env && *env) return env;
#ifdef FFRT_DEFAULT_DATA_DIR
    return FFRT_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

std::string reproduce_compute(const std::string& target, std::ostream& err) {
    std::ostringstream out;
    if (target == "matrix-example") {
        RelmatArgs a;
        a.prime = 3;
        a.level = 1;
        a.vars = 2;
        a.poly = "x^2+x*y";
        run_relmat(a, out);
    } else if (target == "uv-2-3") {
        SignatureArgs a;
        a.prime = 5;
        a.exponents = "1,1";
        a.e_max = 6;
        run_signature_uv(a, out);
    } else if (target == "uv-1-over-d") {
        json rows = json::array();
        for (Exp d = 2; d <= 10; ++d) {
            rows.push_back(json{{"d", d}, {"exact", rational_json(signature_uv_closed({d}))}});
        }
        out << json{{"variant", "uv-closed-one-variable"}, {"rows", rows}}.dump(2) << "\n";
    } else if (target == "sharp-squarefree") {
        SignatureArgs a;
        a.prime = 3;
        a.exponents = "1,1,1";
        a.e_max = 4;
        run_signature_sharp(a, out);
    } else if (target == "ideal-decomp") {
        DecomposeArgs a;
        a.prime = 2;
        a.level = 1;
        a.vars = 2;
        a.ideal = "x^2, x*y";
        run_decompose(a, out);
    } else {
        err << "unknown reproduce target: " << target << "\n";
        return "";
    }
    return out.str();
}

int run_reproduce(const std::string& target, const std::string& dir_flag, std::ostream& out,
                  std::ostream& err) {
    std::string produced = reproduce_compute(target, err);
    if (produced.empty()) return 2;

    std::filesystem::path path = std::filesystem::path(data_dir(dir_flag)) / "reproduce" / (target + ".json");
    std::ifstream in(path);
    if (!in) {
        err << "expected artifact not found: " << path.string() << "\n";
        return 1;
    }
    std::ostringstream expected;
    expected << in.rdbuf();
    if (expected.str() == produced) {
        out << "PASS: " << target << "\n";
        return 0;
    }
    err << "MISMATCH: " << target << "\n--- expected (" << path.string() << ")\n"
        << expected.str() << "--- actual\n"
        << produced;
    return 1;
}

// ---- dispatch -----------------------------------------------------------

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Frobenius pushforward computations for hypersurfaces over F_p"};
    app.require_subcommand(1);

    RelmatArgs relmat_args;
    auto* relmat_cmd = app.add_subcommand("relmat", "Print the matrix of relations of f at level e");
    relmat_cmd->add_option("-p,--prime", relmat_args.prime, "characteristic")->required();
    relmat_cmd->add_option("-e,--level", relmat_args.level, "Frobenius level")->required();
    relmat_cmd->add_option("-n,--vars", relmat_args.vars, "variable count")->required();
    relmat_cmd->add_option("--poly", relmat_args.poly, "polynomial expression")->required();
    relmat_cmd->add_option("--format", relmat_args.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    relmat_cmd->add_flag("--force", relmat_args.force, "ignore the q^n size guard");

    CountArgs count_args;
    auto* count_cmd = app.add_subcommand("count-summands", "Free-summand count of Cok M(f^k, e)");
    count_cmd->add_option("-p,--prime", count_args.prime)->required();
    count_cmd->add_option("-e,--level", count_args.level)->required();
    count_cmd->add_option("-n,--vars", count_args.vars)->required();
    count_cmd->add_option("--poly", count_args.poly)->required();
    count_cmd->add_option("-k,--power", count_args.power)->required();
    count_cmd->add_option("--precision", count_args.precision, "pivoting precision");
    count_cmd->add_flag("--force", count_args.force);

    DecomposeArgs dec_args;
    auto* dec_cmd = app.add_subcommand("decompose", "Decompose the pushforward of S/I for monomial I");
    dec_cmd->add_option("-p,--prime", dec_args.prime)->required();
    dec_cmd->add_option("-e,--level", dec_args.level)->required();
    dec_cmd->add_option("-n,--vars", dec_args.vars)->required();
    dec_cmd->add_option("--ideal", dec_args.ideal, "comma-separated monomial generators")->required();
    dec_cmd->add_flag("--force", dec_args.force);

    SignatureArgs sig_args;
    auto* sig_cmd = app.add_subcommand("signature", "F-signature computations");
    sig_cmd->require_subcommand(1);
    auto* uv_cmd = sig_cmd->add_subcommand("uv", "S[[u,v]]/(f+uv) for monomial f");
    auto* sharp_cmd = sig_cmd->add_subcommand("sharp", "S[[z]]/(f+z^2) for monomial f");
    auto* as_cmd = sig_cmd->add_subcommand("artin-schreier", "S[[y]]/(y^(p^d)+f)");
    for (auto* cmd : {uv_cmd, sharp_cmd}) {
        cmd->add_option("-p,--prime", sig_args.prime)->required();
        cmd->add_option("--exponents", sig_args.exponents, "monomial exponents, e.g. \"2,3\"")->required();
        cmd->add_option("--e-min", sig_args.e_min);
        cmd->add_option("--e-max", sig_args.e_max);
        cmd->add_option("--format", sig_args.format)->check(CLI::IsMember({"json", "csv"}));
    }
    as_cmd->add_option("-p,--prime", sig_args.prime)->required();
    as_cmd->add_option("-n,--vars", sig_args.vars)->required();
    as_cmd->add_option("--poly", sig_args.poly)->required();
    as_cmd->add_option("-d,--d", sig_args.as_level)->required();
    as_cmd->add_option("--precision", sig_args.precision, "pivoting precision");
    as_cmd->add_option("--format", sig_args.format)->check(CLI::IsMember({"json", "csv"}));

    FpureArgs fpure_args;
    auto* fpure_cmd = app.add_subcommand("fpure", "Fedder F-purity test");
    fpure_cmd->add_option("-p,--prime", fpure_args.prime)->required();
    fpure_cmd->add_option("-n,--vars", fpure_args.vars)->required();
    auto* fpure_poly = fpure_cmd->add_option("--poly", fpure_args.poly);
    auto* fpure_ideal = fpure_cmd->add_option("--ideal", fpure_args.ideal);
    fpure_poly->excludes(fpure_ideal);

    std::string repro_target, repro_dir;
    auto* repro_cmd = app.add_subcommand("reproduce", "Re-run a bundled reference computation");
    repro_cmd->add_option("target", repro_target, "matrix-example|uv-2-3|uv-1-over-d|sharp-squarefree|ideal-decomp")
        ->required();
    repro_cmd->add_option("--data-dir", repro_dir, "directory holding reproduce/<target>.json");

    std::vector<const char*> argv;
    argv.push_back("ffrt");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    std::string format = "json";
    try {
        if (relmat_cmd->parsed()) {
            format = relmat_args.format;
            return run_relmat(relmat_args, out);
        }
        if (count_cmd->parsed()) return run_count(count_args, out);
        if (dec_cmd->parsed()) return run_decompose(dec_args, out);
        if (sig_cmd->parsed()) {
            format = sig_args.format;
            if (uv_cmd->parsed()) return run_signature_uv(sig_args, out);
            if (sharp_cmd->parsed()) return run_signature_sharp(sig_args, out);
            return run_signature_as(sig_args, out);
        }
        if (fpure_cmd->parsed()) return run_fpure(fpure_args, out);
        if (repro_cmd->parsed()) return run_reproduce(repro_target, repro_dir, out, err);
        err << "no subcommand\n";
        return 2;
    } catch (const usage_error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        if (format == "text") {
            err << e.what() << "\n";
        } else {
            err << nlohmann::ordered_json{{"error", e.what()}}.dump() << "\n";
        }
        return 1;
    }
}

} // namespace ffrt::cli
