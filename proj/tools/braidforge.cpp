// braidforge: build, verify, and measure braid-group representation
// constructions. See README.md for the file format and examples.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "braidforge/correspond.hpp"
#include "braidforge/repfile.hpp"

using namespace braidforge;

namespace {

// Exit-code contract: 0 pass, 2 validation failure, 3 parse failure,
// 4 resource guard.
constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_validation = 2;
constexpr int exit_parse = 3;
constexpr int exit_guard = 4;

Tolerances global_tolerances() {
    Tolerances tol;
    if (const char* env = std::getenv("BRAIDFORGE_TOL")) {
        try {
            tol.residual_rel = std::stod(env);
        } catch (const std::exception&) {
            throw parse_error("BRAIDFORGE_TOL: not a number");
        }
        tol.validate();
    }
    return tol;
}

cplx parse_complex_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw parse_error("complex value must be RE,IM (got '" + text + "')");
    try {
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw parse_error("complex value must be RE,IM (got '" + text + "')");
    }
}

std::string fmt_cplx(cplx v) {
    std::ostringstream os;
    os << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i";
    return os.str();
}

// "n=3;t=0.5,0.8;s=1,0" -> scalar seed (s optional, defaults to 1).
SemidirectRep parse_scalar_params(const std::string& text) {
    int n = 0;
    cplx t(0.0, 0.0), s(1.0, 0.0);
    std::istringstream is(text);
    std::string field;
    while (std::getline(is, field, ';')) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) throw parse_error("scalar params: expected key=value fields");
        const std::string key = field.substr(0, eq), val = field.substr(eq + 1);
        if (key == "n") n = std::stoi(val);
        else if (key == "t") t = parse_complex_pair(val);
        else if (key == "s") s = parse_complex_pair(val);
        else throw parse_error("scalar params: unknown key '" + key + "'");
    }
    if (n < 2 || t == cplx(0.0, 0.0))
        throw parse_error("scalar params: need at least n=<int> and t=RE,IM");
    return scalar_seed(n, t, std::vector<cplx>(static_cast<size_t>(n - 1), s));
}

std::vector<CMatrix> named_matrices(const std::map<std::string, CMatrix>& m, const char* prefix,
                                    int count) {
    std::vector<CMatrix> out;
    for (int j = 1; j <= count; ++j) {
        auto it = m.find(prefix + std::to_string(j));
        if (it == m.end())
            throw validation_error(std::string("input file: missing matrix ") + prefix +
                                   std::to_string(j));
        out.push_back(it->second);
    }
    return out;
}

struct SuiteRow {
    std::string name;
    double residual;
    double bound;
    bool pass;
};

void print_rows(const std::vector<SuiteRow>& rows, bool as_json) {
    if (as_json) {
        std::printf("{\n  \"checks\": [");
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i) std::printf(",");
            std::printf("\n    {\"name\": \"%s\", \"residual\": %.17g, \"bound\": %.17g, "
                        "\"pass\": %s}",
                        rows[i].name.c_str(), rows[i].residual, rows[i].bound,
                        rows[i].pass ? "true" : "false");
        }
        std::printf("\n  ]\n}\n");
    } else {
        std::printf("%-44s %12s %9s  %s\n", "check", "residual", "bound", "verdict");
        for (const auto& r : rows)
            std::printf("%-44s %12.3e %9.1e  %s\n", r.name.c_str(), r.residual, r.bound,
                        r.pass ? "PASS" : "FAIL");
    }
}

// ---------------------------------------------------------------- build --

int cmd_build(const std::string& construction, const std::string& input,
              const std::string& output, cplx lambda, long k, int j_index) {
    const Tolerances tol = global_tolerances();
    RepFile in = load_repfile(input);
    std::map<std::string, std::string> meta = {{"construction", construction},
                                               {"lambda", fmt_cplx(lambda)}};

    RepFile out;
    if (construction == "tlm" || construction == "wada") {
        SemidirectRep rep = to_semidirect(in);
        const long kk = construction == "tlm" ? 1 : k;
        SemidirectRep res = construction == "tlm" ? twisted_lm(rep, {lambda, 1})
                                                  : wada_lm(rep, {lambda, kk});
        meta["k"] = std::to_string(kk);
        out = from_semidirect(res, meta);
    } else if (construction == "klm") {
        SemidirectRep rep = to_semidirect(in);
        KlmResult res = klm(rep, {lambda, 1}, tol);
        meta["dim_kl"] = std::to_string(res.qd.dim_w());
        meta["dim_quotient"] = std::to_string(res.qd.dim_quotient());
        if (res.rep.N == 0)
            std::fprintf(stderr, "warning: quotient is 0-dimensional (K+L is everything)\n");
        out = from_semidirect(res.rep, meta);
    } else if (construction == "lm") {
        // classical Long-Moody: braid images only
        SemidirectRep rep = to_semidirect(in);
        SemidirectRep res;
        res.n = rep.n;
        res.N = rep.N * rep.n;
        for (const auto& [i, m] : rep.s) {
            (void)m;
            res.s[i] = lm_sigma(rep, i);
        }
        out = from_semidirect(res, meta);
    } else if (construction == "dr") {
        // free-group convolution: all DR matrices, empty s-domain
        SemidirectRep rep = to_semidirect(in);
        SemidirectRep res;
        res.n = rep.n;
        res.N = rep.N * rep.n;
        for (int j = 1; j <= rep.n; ++j) res.g.push_back(dr_matrix(rep.g, lambda, j));
        out = from_semidirect(res, meta);
    } else if (construction == "haraoka") {
        PureBraidAntiRep rep = in.kind == RepFile::Kind::PureAnti
                                   ? to_pure_anti(in)
                                   : restrict_to_pure(to_semidirect(in));
        out = from_pure_anti(haraoka_convolution(rep, lambda), meta);
    } else if (construction == "b0j") {
        if (j_index < 1) throw validation_error("b0j: pass --j ROW (1-based)");
        SemidirectRep rep = to_semidirect(in); // carrier for the A_{0j} blocks
        CMatrix b = additive_b0j(rep.g, lambda, j_index);
        RepFile f;
        f.n = 1;
        f.N = b.rows();
        f.g["x1"] = b;
        meta["j"] = std::to_string(j_index);
        f.metadata = meta;
        out = f;
    } else if (construction == "basisP") {
        std::vector<CMatrix> M0;
        if (in.kind == RepFile::Kind::PureAnti) {
            PureBraidAntiRep rep = to_pure_anti(in);
            for (int j = 1; j <= rep.n; ++j) M0.push_back(rep.at(0, j));
        } else {
            M0 = to_semidirect(in).g;
        }
        bool singular = false;
        CMatrix P = basis_matrix_p(M0, lambda, &singular, tol);
        if (singular) {
            std::fprintf(stderr, "warning: P is singular for this input\n");
            meta["singular"] = "true";
        }
        RepFile f;
        f.n = 1;
        f.N = P.rows();
        f.g["x1"] = P;
        f.metadata = meta;
        out = f;
    } else {
        throw parse_error("unknown construction '" + construction + "'");
    }
    save_repfile(out, output);
    std::printf("wrote %s (%s, n=%d, N=%ld)\n", output.c_str(), construction.c_str(), out.n,
                static_cast<long>(out.N));
    return exit_ok;
}

// --------------------------------------------------------------- verify --

std::vector<std::pair<SemidirectRep, cplx>> generate_suite(const std::string& kind,
                                                           std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<SemidirectRep, cplx>> suite;
    auto scalar = [&](int n) {
        const cplx t = rng.unit_complex(), s = rng.unit_complex();
        return scalar_seed(n, t, std::vector<cplx>(static_cast<size_t>(n - 1), s));
    };
    if (kind == "scalar") {
        for (int n = 2; n <= 5; ++n)
            for (int d = 0; d < 3; ++d) suite.push_back({scalar(n), rng.unit_complex()});
    } else if (kind == "tower") {
        for (int n = 2; n <= 4; ++n)
            for (int d = 0; d < 3; ++d)
                suite.push_back(
                    {twisted_lm(scalar(n), {rng.unit_complex(), 1}), rng.unit_complex()});
    } else if (kind == "random") {
        // unitary free reps have no braid part; pair them with scalar towers
        for (int d = 0; d < 4; ++d) {
            const int n = 2 + static_cast<int>(rng.next() % 3);
            suite.push_back(
                {twisted_lm(scalar(n), {rng.unit_complex(), 1}), rng.unit_complex()});
        }
    } else {
        throw parse_error("unknown suite generator '" + kind + "' (scalar|tower|random)");
    }
    return suite;
}

int cmd_verify(const std::string& suite_name, const std::string& input,
               const std::string& generate, std::uint64_t seed, bool as_json) {
    const Tolerances tol = global_tolerances();
    std::vector<std::pair<SemidirectRep, cplx>> suite;
    if (!input.empty()) {
        Rng rng(seed);
        suite.push_back({to_semidirect(load_repfile(input)), rng.unit_complex()});
    } else {
        suite = generate_suite(generate.empty() ? "scalar" : generate, seed);
    }

    std::vector<SuiteRow> rows;
    auto add = [&](const std::string& name, double residual, double bound) {
        rows.push_back({name, residual, bound, residual <= bound});
    };

    int idx = 0;
    for (auto& [rep, lambda] : suite) {
        const std::string tag = "#" + std::to_string(idx++) + " n=" + std::to_string(rep.n) +
                                " N=" + std::to_string(rep.N);
        const bool with_braid = rep.full_s_domain();
        if (suite_name == "relations" || suite_name == "all") {
            add(tag + " compat", check_semidirect_compat(rep, tol), tol.residual_rel);
            if (with_braid) add(tag + " braid", check_braid_relations(rep, tol), tol.residual_rel);
        }
        if ((suite_name == "correspondence" || suite_name == "all") && with_braid) {
            CorrespondenceReport r = verify_main_theorem(rep, lambda, {}, tol);
            add(tag + " correspondence", r.max_residual, tol.residual_rel);
        }
        if ((suite_name == "unitarity" || suite_name == "all") && rep.H) {
            SemidirectRep lm = twisted_lm(rep, {lambda, 1});
            add(tag + " H~ hermiticity", lm.H->hermiticity_residual, tol.residual_rel);
            std::vector<CMatrix> all = lm.g;
            for (const auto& [i, m] : lm.s) all.push_back(m);
            add(tag + " unitarity", check_unitary(all, *lm.H), 1e-8);
        }
        if ((suite_name == "signature" || suite_name == "all") && rep.H) {
            SemidirectRep lm = twisted_lm(rep, {lambda, 1});
            SignatureReport r = signature_recursive(*lm.H, 1, tol);
            rows.push_back({tag + " signature recursive=oracle" +
                                (r.fallback_used ? " [fallback]" : ""),
                            r.agrees() ? 0.0 : 1.0, 0.5, r.agrees()});
        }
    }
    if (suite_name != "relations" && suite_name != "correspondence" && suite_name != "unitarity" &&
        suite_name != "signature" && suite_name != "all")
        throw parse_error("unknown suite '" + suite_name + "'");

    print_rows(rows, as_json);
    bool all_pass = true;
    for (const auto& r : rows) all_pass = all_pass && r.pass;
    if (!as_json) std::printf("%s\n", all_pass ? "ALL PASS" : "FAILURES PRESENT");
    return all_pass ? exit_ok : exit_fail;
}

// ------------------------------------------------------------ signature --

int cmd_signature(const std::string& input, const std::string& algorithm, bool have_lambda,
                  cplx lambda) {
    const Tolerances tol = global_tolerances();
    RepFile f = load_repfile(input);
    HermitianForm Ht{CMatrix(), 0.0};
    index_t block = 1;
    if (have_lambda) {
        SemidirectRep rep = to_semidirect(f);
        if (!rep.H) throw validation_error("signature: rep file has no H to twist");
        Ht = build_h_tilde(rep.g, *rep.H, lambda);
        block = rep.N;
    } else if (f.H) {
        Ht = make_hermitian_form(*f.H);
    } else if (f.g.size() == 1 && f.g.count("x1")) {
        Ht = make_hermitian_form(f.g.at("x1"));
    } else {
        throw validation_error("signature: pass a file with an H matrix, or a rep plus --lambda");
    }
    if (Ht.hermiticity_residual > tol.residual_rel)
        throw validation_error("signature: input is not Hermitian within tolerance");

    if (algorithm == "oracle") {
        Inertia o = signature_oracle(Ht, tol);
        std::printf("p=%ld q=%ld z=%ld\n", static_cast<long>(o.p), static_cast<long>(o.q),
                    static_cast<long>(o.z));
        return exit_ok;
    }
    SignatureReport r = signature_recursive(Ht, block, tol);
    if (algorithm == "recursive") {
        std::printf("p=%ld q=%ld z=%ld%s\n", static_cast<long>(r.inertia.p),
                    static_cast<long>(r.inertia.q), static_cast<long>(r.inertia.z),
                    r.fallback_used ? " (fallback used)" : "");
        return exit_ok;
    }
    if (algorithm != "both") throw parse_error("unknown algorithm '" + algorithm + "'");
    std::printf("recursive: p=%ld q=%ld z=%ld%s\n", static_cast<long>(r.inertia.p),
                static_cast<long>(r.inertia.q), static_cast<long>(r.inertia.z),
                r.fallback_used ? " (fallback used)" : "");
    std::printf("oracle:    p=%ld q=%ld z=%ld\n", static_cast<long>(r.oracle.p),
                static_cast<long>(r.oracle.q), static_cast<long>(r.oracle.z));
    std::printf("verdict:   %s\n", r.agrees() ? "MATCH" : "MISMATCH");
    std::printf("%s\n", signature_report_json(r).c_str());
    return r.agrees() ? exit_ok : exit_fail;
}

// ---------------------------------------------------------------- tower --

int cmd_tower(int depth, const std::string& lambdas_text, const std::string& seed_file,
              const std::string& scalar_params, const std::string& emit_dir, bool use_tlm,
              index_t max_dim) {
    const Tolerances tol = global_tolerances();
    SemidirectRep seed;
    if (!seed_file.empty()) {
        seed = to_semidirect(load_repfile(seed_file));
    } else if (!scalar_params.empty()) {
        seed = parse_scalar_params(scalar_params);
    } else {
        throw parse_error("tower: pass --seed-rep FILE or --scalar PARAMS");
    }

    std::vector<cplx> lambdas;
    {
        std::istringstream is(lambdas_text);
        std::string item;
        while (std::getline(is, item, ';'))
            if (!item.empty()) lambdas.push_back(parse_complex_pair(item));
    }
    if (static_cast<int>(lambdas.size()) == 1 && depth > 1)
        lambdas.assign(static_cast<size_t>(depth), lambdas[0]);

    TowerOptions opts;
    opts.use_klm = !use_tlm;
    opts.max_dim = max_dim;
    auto levels = tower(seed, lambdas, depth, opts, tol);

    if (!emit_dir.empty()) std::filesystem::create_directories(emit_dir);
    std::ostringstream summary;
    summary.precision(17);
    summary << "{\n  \"levels\": [";
    for (size_t i = 0; i < levels.size(); ++i) {
        const auto& lvl = levels[i];
        const std::string comm =
            lvl.commutant_dim ? std::to_string(*lvl.commutant_dim) : std::string("-");
        std::printf("level %d: dim=%ld dim_kl=%ld compat=%.3e braid=%.3e commutant=%s\n",
                    lvl.level, static_cast<long>(lvl.dim), static_cast<long>(lvl.dim_kl),
                    lvl.compat_residual, lvl.braid_residual, comm.c_str());
        if (i) summary << ",";
        summary << "\n    {\"level\": " << lvl.level << ", \"dim\": " << lvl.dim
                << ", \"dim_kl\": " << lvl.dim_kl << ", \"compat_residual\": " << lvl.compat_residual
                << ", \"braid_residual\": " << lvl.braid_residual;
        if (lvl.commutant_dim) summary << ", \"commutant_dim\": " << *lvl.commutant_dim;
        if (lvl.signature) summary << ", \"signature\": " << signature_report_json(*lvl.signature);
        summary << "}";
        if (!emit_dir.empty() && lvl.dim > 0) {
            const std::string path =
                (std::filesystem::path(emit_dir) / ("level" + std::to_string(lvl.level) + ".json"))
                    .string();
            save_repfile(from_semidirect(lvl.rep, {{"level", std::to_string(lvl.level)}}), path);
        }
    }
    summary << "\n  ]\n}\n";
    if (!emit_dir.empty()) {
        const std::string path = (std::filesystem::path(emit_dir) / "summary.json").string();
        std::ofstream out(path, std::ios::binary);
        out << summary.str();
        std::printf("wrote %s\n", path.c_str());
    } else {
        std::printf("%s", summary.str().c_str());
    }
    if (!levels.empty() && levels.back().dim == 0)
        std::printf("tower degenerated to dimension 0 at level %d\n", levels.back().level);
    return exit_ok;
}

// ----------------------------------------------------------------- word --

int cmd_word(const std::string& text, int n) {
    const MixedWord w = parse_word(text, n);
    std::printf("%s\n", format_word(w).c_str());
    bool braid_only = true;
    for (const auto& t : w.tokens) braid_only = braid_only && t.is_braid;
    if (braid_only && !w.tokens.empty()) {
        std::vector<BraidLetter> ls;
        for (const auto& t : w.tokens) ls.push_back({t.index, t.exponent});
        const BraidWord b(n, ls);
        const auto perm = permutation_of(b);
        std::printf("permutation:");
        for (int v : perm) std::printf(" %d", v);
        std::printf("\npure: %s\n", is_pure(b) ? "yes" : "no");
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"braid-group representation constructions: Long-Moody towers, "
                 "multiplicative convolution, and invariant-form signatures"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "construct a new representation file");
    std::string construction, in_file, out_file, lambda_text = "1,0";
    long k = 1;
    int j_index = 0;
    build->add_option("--construction", construction,
                      "lm|dr|tlm|wada|klm|haraoka|b0j|basisP")->required();
    build->add_option("--input", in_file, "input rep file")->required();
    build->add_option("--lambda", lambda_text, "twist parameter RE,IM");
    build->add_option("--k", k, "Wada exponent (wada only)");
    build->add_option("--j", j_index, "block row (b0j only)");
    build->add_option("--out", out_file, "output rep file")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run a residual suite");
    std::string suite = "all", v_input, v_generate;
    std::uint64_t seed = 0;
    bool as_json = false;
    verify->add_option("--suite", suite, "relations|correspondence|unitarity|signature|all");
    verify->add_option("--input", v_input, "verify this rep file");
    verify->add_option("--generate", v_generate, "scalar|tower|random");
    verify->add_option("--seed", seed, "deterministic suite seed");
    verify->add_flag("--json", as_json, "emit a JSON report");

    // signature
    auto* sig = app.add_subcommand("signature", "inertia of a Hermitian form");
    std::string s_input, algorithm = "both", s_lambda_text;
    sig->add_option("--input", s_input, "H~ file or rep file")->required();
    sig->add_option("--algorithm", algorithm, "recursive|oracle|both");
    sig->add_option("--lambda", s_lambda_text, "build H~ from the rep first (RE,IM)");

    // tower
    auto* tw = app.add_subcommand("tower", "iterate the quotient construction");
    int depth = 1;
    std::string lambdas_text = "1,0", seed_rep, scalar_params, emit_dir;
    bool use_tlm = false;
    index_t max_dim = 4096;
    tw->add_option("--depth", depth, "number of levels")->required();
    tw->add_option("--lambdas", lambdas_text, "semicolon-separated RE,IM list");
    tw->add_option("--seed-rep", seed_rep, "seed rep file");
    tw->add_option("--scalar", scalar_params, "scalar seed, e.g. n=3;t=0.309,0.951;s=1,0");
    tw->add_option("--emit-levels", emit_dir, "write one rep file per level");
    tw->add_flag("--tlm", use_tlm, "iterate twisted_lm without quotienting");
    tw->add_option("--max-dim", max_dim, "abort when a level would exceed this dimension");

    // word
    auto* wd = app.add_subcommand("word", "echo a word in the braid/free letters");
    std::string word_text;
    int word_n = 2;
    wd->add_option("--parse", word_text, "tokens like \"s1 s2^-1 x3\"")->required();
    wd->add_option("--n", word_n, "ambient rank / strand count");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed())
            return cmd_build(construction, in_file, out_file, parse_complex_pair(lambda_text), k,
                             j_index);
        if (verify->parsed()) return cmd_verify(suite, v_input, v_generate, seed, as_json);
        if (sig->parsed())
            return cmd_signature(s_input, algorithm, !s_lambda_text.empty(),
                                 s_lambda_text.empty() ? cplx(0, 0)
                                                       : parse_complex_pair(s_lambda_text));
        if (tw->parsed())
            return cmd_tower(depth, lambdas_text, seed_rep, scalar_params, emit_dir, use_tlm,
                             max_dim);
        if (wd->parsed()) return cmd_word(word_text, word_n);
    } catch (const parse_error& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return exit_parse;
    } catch (const size_guard_error& e) {
        std::fprintf(stderr, "size guard: %s\n", e.what());
        return exit_guard;
    } catch (const validation_error& e) {
        std::fprintf(stderr, "validation error: %s\n", e.what());
        return exit_validation;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_validation;
    }
    return exit_ok;
}
