// minv: batch front-end for exact matrix-tuple invariants, simultaneous
// conjugacy with witnesses, and desk-scale n-variety checks.
//
// Exit codes: 0 yes / 1 no / 2 input error / 3 internal disagreement /
// 4 inconclusive.  All output is exact; identical invocations (including
// --seed) produce byte-identical output.

#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "minv/conjugacy.hpp"
#include "minv/io.hpp"

namespace {

using namespace minv;

constexpr int exit_yes = 0;
constexpr int exit_no = 1;
constexpr int exit_input_error = 2;
constexpr int exit_disagreement = 3;
constexpr int exit_inconclusive = 4;

struct Output {
    bool as_json = false;
    Json obj = Json::object();
    std::ostringstream text;

    void kv(const std::string& key, const Json& value) {
        obj[key] = value;
        if (value.is_string())
            text << key << ": " << value.get<std::string>() << "\n";
        else
            text << key << ": " << value.dump() << "\n";
    }
    void emit() const {
        if (as_json)
            std::cout << obj.dump(2) << "\n";
        else
            std::cout << text.str();
    }
};

std::string words_line(const std::vector<Word>& words) {
    std::string s;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) s += ' ';
        s += word_to_string(words[i]);
    }
    return s;
}

void describe_verdict(Output& out, const std::string& prefix, const ConjugacyVerdict& v) {
    switch (v.outcome) {
        case ConjugacyOutcome::Conjugate:
            out.kv(prefix + "outcome", "conjugate");
            out.kv(prefix + "g", matrix_to_json(*v.g));
            break;
        case ConjugacyOutcome::NotConjugate:
            out.kv(prefix + "outcome", "not-conjugate");
            if (v.fingerprint_witness) {
                const Separation& s = *v.fingerprint_witness;
                out.kv(prefix + "witness", "(" + std::to_string(s.s) + "," + word_to_string(s.w) + ")");
                out.kv(prefix + "value-x", s.value_x->ctx().to_string(*s.value_x));
                out.kv(prefix + "value-y", s.value_y->ctx().to_string(*s.value_y));
            } else if (v.rank_defect) {
                out.kv(prefix + "reason", "intertwiner-rank-defect");
            } else if (v.word_witness) {
                out.kv(prefix + "witness-word", word_to_string(*v.word_witness));
            } else if (v.invariant_witness) {
                out.kv(prefix + "witness-element",
                       "c" + std::to_string(v.invariant_witness->first) + " of " +
                           v.invariant_witness->second.to_string());
            }
            break;
        case ConjugacyOutcome::Inconclusive:
            out.kv(prefix + "outcome", "inconclusive");
            out.kv(prefix + "reason", v.detail);
            break;
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exact invariants and conjugacy of matrix tuples"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")->check(CLI::IsMember({"text", "json"}));
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed recorded in the output and used by randomized searches");

    std::string x_path, y_path, map_path;
    std::size_t opt_L = 0; // 0: default n^2
    std::size_t opt_d = 2;
    bool cyclic_dedup = false;
    SearchBudget budget;
    std::string algo = "linear";

    CLI::App* cmd_in_u = app.add_subcommand("in-u", "test membership in U_{m,n} with a certificate");
    cmd_in_u->add_option("tuple", x_path, "tuple JSON file")->required();

    CLI::App* cmd_conj = app.add_subcommand("conjugate", "decide simultaneous conjugacy with a witness");
    cmd_conj->add_option("x", x_path)->required();
    cmd_conj->add_option("y", y_path)->required();
    cmd_conj->add_option("--algo", algo, "linear, reconstruct, or both")
        ->check(CLI::IsMember({"linear", "reconstruct", "both"}));
    cmd_conj->add_option("--L", opt_L, "fingerprint length bound (default n^2)");
    cmd_conj->add_option("--budget-words", budget.word_cap, "word length cap for the splitting search");
    cmd_conj->add_option("--budget-tries", budget.tries, "random combinations for the splitting search");

    CLI::App* cmd_fp = app.add_subcommand("fingerprint", "evaluate the Donkin generator table");
    cmd_fp->add_option("tuple", x_path)->required();
    cmd_fp->add_option("--L", opt_L, "word length bound (default n^2)");
    cmd_fp->add_flag("--cyclic-dedup", cyclic_dedup, "keep only minimal cyclic rotations");

    CLI::App* cmd_sep = app.add_subcommand("separate", "compare two tuples through their fingerprints");
    cmd_sep->add_option("x", x_path)->required();
    cmd_sep->add_option("y", y_path)->required();
    cmd_sep->add_option("--L", opt_L, "word length bound (default n^2)");
    cmd_sep->add_flag("--cyclic-dedup", cyclic_dedup, "keep only minimal cyclic rotations");

    CLI::App* cmd_ker = app.add_subcommand("kernel", "evaluation-kernel basis of a point variety");
    cmd_ker->add_option("variety", x_path)->required();
    cmd_ker->add_option("--d", opt_d, "degree bound (default 2)");

    CLI::App* cmd_mor = app.add_subcommand("morphism", "check the corrected morphism criterion per sample point");
    cmd_mor->add_option("map", map_path)->required();
    cmd_mor->add_option("x", x_path, "source variety")->required();
    cmd_mor->add_option("y", y_path, "target variety")->required();
    cmd_mor->add_option("--d", opt_d, "kernel degree bound (default 2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : exit_input_error;
    }

    Output out;
    out.as_json = format == "json";
    out.kv("seed", seed);

    if (*cmd_in_u) {
        out.kv("command", "in-u");
        MatTuple x = load_tuple(x_path);
        GenerationCertificate cert = in_U(x);
        out.kv("verdict", cert.verdict);
        out.kv("defect-dim", cert.defect_dim);
        if (cert.verdict) out.kv("spanning-words", words_line(cert.spanning_words));
        out.emit();
        return cert.verdict ? exit_yes : exit_no;
    }

    if (*cmd_conj) {
        out.kv("command", "conjugate");
        out.kv("algo", algo);
        MatTuple x = load_tuple(x_path);
        MatTuple y = load_tuple(y_path);
        if (algo == "linear") {
            ConjugacyVerdict v = conjugacy_linear(x, y);
            describe_verdict(out, "", v);
            out.emit();
            return v.is_conjugate() ? exit_yes : exit_no;
        }
        if (algo == "reconstruct") {
            ConjugacyVerdict v = conjugacy_reconstruct(x, y, opt_L, budget, seed);
            describe_verdict(out, "", v);
            out.emit();
            if (v.outcome == ConjugacyOutcome::Inconclusive) return exit_inconclusive;
            return v.is_conjugate() ? exit_yes : exit_no;
        }
        ConjugacyVerdict lin = conjugacy_linear(x, y);
        ConjugacyVerdict rec = conjugacy_reconstruct(x, y, opt_L, budget, seed);
        describe_verdict(out, "", lin);
        describe_verdict(out, "reconstruct-", rec);
        bool disagree = rec.outcome != ConjugacyOutcome::Inconclusive && lin.is_conjugate() != rec.is_conjugate();
        out.kv("agreement", !disagree);
        out.emit();
        if (disagree) return exit_disagreement;
        return lin.is_conjugate() ? exit_yes : exit_no;
    }

    if (*cmd_fp) {
        out.kv("command", "fingerprint");
        MatTuple x = load_tuple(x_path);
        std::size_t L = opt_L ? opt_L : default_separation_bound(x.n());
        out.kv("L", L);
        Fingerprint fp = fingerprint(x, L, cyclic_dedup);
        if (out.as_json) {
            Json entries = Json::array();
            for (std::size_t i = 0; i < fp.layout().size(); ++i) {
                Json e;
                e["s"] = fp.layout()[i].first;
                e["w"] = word_to_string(fp.layout()[i].second);
                e["value"] = fp.ctx().to_string(fp.entries()[i]);
                entries.push_back(std::move(e));
            }
            out.obj["entries"] = std::move(entries);
        } else {
            out.text << fp.to_text();
        }
        out.emit();
        return exit_yes;
    }

    if (*cmd_sep) {
        out.kv("command", "separate");
        MatTuple x = load_tuple(x_path);
        MatTuple y = load_tuple(y_path);
        std::size_t L = opt_L ? opt_L : default_separation_bound(x.n());
        out.kv("L", L);
        Separation sep = separate(x, y, L, cyclic_dedup);
        if (sep.same_fiber) {
            out.kv("result", "SameFiber");
            out.emit();
            return exit_yes;
        }
        out.kv("result", "Separated");
        out.kv("witness", "(" + std::to_string(sep.s) + "," + word_to_string(sep.w) + ")");
        out.kv("value-x", x.ctx().to_string(*sep.value_x));
        out.kv("value-y", y.ctx().to_string(*sep.value_y));
        out.emit();
        return exit_no;
    }

    if (*cmd_ker) {
        out.kv("command", "kernel");
        out.kv("d", opt_d);
        PointVariety X = load_variety(x_path);
        std::vector<NcPoly> basis = ideal_kernel_basis(X, opt_d);
        out.kv("dim", basis.size());
        if (out.as_json) {
            Json arr = Json::array();
            for (const NcPoly& p : basis) arr.push_back(p.to_string());
            out.obj["basis"] = std::move(arr);
        } else {
            for (const NcPoly& p : basis) out.text << "basis: " << p.to_string() << "\n";
        }
        out.emit();
        return exit_yes;
    }

    if (*cmd_mor) {
        out.kv("command", "morphism");
        out.kv("d", opt_d);
        FieldCtx map_ctx = FieldCtx::rationals();
        RegularMapSpec F = load_mapspec(map_path, &map_ctx);
        PointVariety X = load_variety(x_path);
        PointVariety Y = load_variety(y_path);
        if (!map_ctx.same(X.ctx())) fail(Err::FieldMismatch, "map and varieties use different fields");
        MorphismReport rep = morphism_check(F, X, Y, opt_d);
        if (out.as_json) {
            Json arr = Json::array();
            for (const auto& r : rep.records) {
                Json e;
                e["point"] = r.index;
                e["in-u"] = r.in_u_target;
                e["annihilates-kernel"] = r.annihilates_target_ideal;
                e["pass"] = r.pass();
                arr.push_back(std::move(e));
            }
            out.obj["points"] = std::move(arr);
        } else {
            for (const auto& r : rep.records)
                out.text << "point " << r.index << ": in-u=" << (r.in_u_target ? "true" : "false")
                         << " annihilates-kernel=" << (r.annihilates_target_ideal ? "true" : "false")
                         << " pass=" << (r.pass() ? "true" : "false") << "\n";
        }
        out.kv("verdict", rep.verdict);
        out.emit();
        return rep.verdict ? exit_yes : exit_no;
    }

    return exit_input_error;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const minv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}
