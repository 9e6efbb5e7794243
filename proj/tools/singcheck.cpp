// singcheck: exact verification of the relative Milnor-Palamodov identity
// and its companion identities for a pair of germs (f, V = g^{-1}(0)).
//
// Exit codes: 0 all identities verified, 1 precondition failure,
// 2 parse/input error, 3 internal consistency failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <singcheck/singcheck.hpp>

namespace {

using namespace singcheck;

constexpr int kOk = 0;
constexpr int kPrecondition = 1;
constexpr int kInput = 2;
constexpr int kInternal = 3;

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::string join_names(const ContextPtr& ctx) {
    std::string out;
    for (std::size_t i = 0; i < ctx->names.size(); ++i) out += (i ? "," : "") + ctx->names[i];
    return out;
}

ContextPtr context_from_csv(const std::string& vars, std::size_t min_vars) {
    std::vector<std::string> names = split(vars, ',');
    ContextPtr ctx = make_context(std::move(names));
    if (ctx->nvars() < min_vars)
        throw std::invalid_argument("need at least " + std::to_string(min_vars) + " variables");
    return ctx;
}

struct Outcome {
    int code = kOk;
    OrderedJson json;
    std::string text;
};

OrderedJson input_error_json(const std::string& message, const OrderedJson& position = nullptr) {
    OrderedJson err;
    err["kind"] = "input_error";
    err["message"] = message;
    if (!position.is_null()) err["position"] = position;
    OrderedJson j;
    j["error"] = std::move(err);
    return j;
}

Outcome run_verify(const std::string& vars, const std::string& f_text, const std::string& g_text,
                   const VerifyOptions& opts) {
    Outcome out;
    std::string vars_canon = vars, f_canon = f_text, g_canon = g_text;
    try {
        ContextPtr ctx = context_from_csv(vars, 2);
        Poly f = parse_poly(f_text, ctx);
        Poly g = parse_poly(g_text, ctx);
        vars_canon = join_names(ctx);
        f_canon = f.to_string();
        g_canon = g.to_string();
        GermPair pair = make_germ_pair(f, g);
        InvariantReport rep = verify_theorem(pair, opts);
        out.json = report_json(rep, vars_canon, f_canon, g_canon);
        out.text = report_text(rep, vars_canon, f_canon, g_canon);
        bool oracle_ok = true;
        if (rep.oracle_agrees)
            for (const auto& [name, ok] : *rep.oracle_agrees) oracle_ok = oracle_ok && ok;
        out.code = rep.all_identities_hold() && oracle_ok ? kOk : kInternal;
    } catch (const ParseError& e) {
        out.code = kInput;
        out.json = input_error_json(e.what(), e.position);
        out.text = std::string("error (input): ") + e.what() + "\n";
    } catch (const PreconditionError& e) {
        out.code = kPrecondition;
        out.json = precondition_refusal_json(e, vars_canon, f_canon, g_canon);
        out.text = std::string("error (precondition): ") + e.what() + "\n";
    } catch (const InternalCheckError& e) {
        out.code = kInternal;
        OrderedJson err;
        err["kind"] = "internal_inconsistency";
        err["message"] = e.what();
        out.json["vars"] = vars_canon;
        out.json["f"] = f_canon;
        out.json["g"] = g_canon;
        out.json["error"] = std::move(err);
        out.text = std::string("error (internal): ") + e.what() + "\n";
    } catch (const std::invalid_argument& e) {
        out.code = kInput;
        out.json = input_error_json(e.what());
        out.text = std::string("error (input): ") + e.what() + "\n";
    }
    return out;
}

struct InvariantRequest {
    std::string which;
    bool needs_g = false;
};

Outcome run_invariant(const std::string& which, const std::string& vars, const std::string& f_text,
                      const std::string& g_text) {
    Outcome out;
    try {
        ContextPtr ctx = context_from_csv(vars, 2);
        Poly f = parse_poly(f_text, ctx);
        auto finish = [&](std::uint64_t value) {
            out.json["which"] = which;
            out.json["vars"] = join_names(ctx);
            out.json["f"] = f.to_string();
            if (!g_text.empty()) out.json["g"] = parse_poly(g_text, ctx).to_string();
            out.json["value"] = value;
            out.text = which + " = " + std::to_string(value) + "\n";
        };
        auto finite_or_refuse = [&](const DimResult& d, const char* what) {
            if (!d.finite)
                throw PreconditionError(std::string(what) + " is infinite (non-isolated)",
                                        {std::string(what) + "_finite"});
            return d.value;
        };
        if (which == "milnor") {
            finish(finite_or_refuse(milnor_number(f), "milnor"));
        } else if (which == "tjurina") {
            finish(finite_or_refuse(tjurina_number(f), "tjurina"));
        } else {
            if (g_text.empty())
                throw std::invalid_argument("--which " + which + " needs --g");
            Poly g = parse_poly(g_text, ctx);
            if (which == "bruce_roberts")
                finish(bruce_roberts(f, g));
            else if (which == "mu_G")
                finish(mu_G(f, g));
            else if (which == "mu_BR_rel")
                finish(mu_BR_rel(f, g));
            else if (which == "mu_fV")
                finish(mu_fV_le_greuel(f, g));
            else
                throw std::invalid_argument("unknown invariant '" + which + "'");
        }
    } catch (const ParseError& e) {
        out.code = kInput;
        out.json = input_error_json(e.what(), e.position);
        out.text = std::string("error (input): ") + e.what() + "\n";
    } catch (const PreconditionError& e) {
        out.code = kPrecondition;
        out.json = precondition_refusal_json(e, vars, f_text, g_text);
        out.text = std::string("error (precondition): ") + e.what() + "\n";
    } catch (const InternalCheckError& e) {
        out.code = kInternal;
        out.json = input_error_json(e.what());
        out.json["error"]["kind"] = "internal_inconsistency";
        out.text = std::string("error (internal): ") + e.what() + "\n";
    } catch (const std::invalid_argument& e) {
        out.code = kInput;
        out.json = input_error_json(e.what());
        out.text = std::string("error (input): ") + e.what() + "\n";
    }
    return out;
}

void emit(const Outcome& out, const std::string& format) {
    if (format == "json")
        std::cout << out.json.dump(2) << "\n";
    else
        std::cout << out.text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact local singularity invariants and identity verification"};
    app.require_subcommand(1);

    std::string vars, f_text, g_text, format = "text", which, input_path;
    bool oracle = false;
    unsigned oracle_max_degree = 24;

    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
    };

    CLI::App* verify = app.add_subcommand("verify", "verify all identities for one pair (f, g)");
    verify->add_option("--vars", vars, "comma-separated variable names")->required();
    verify->add_option("--f", f_text, "polynomial f")->required();
    verify->add_option("--g", g_text, "polynomial g defining V")->required();
    add_format(verify);
    verify->add_flag("--oracle", oracle, "re-derive every dimension with the jet oracle");
    verify->add_option("--oracle-max-degree", oracle_max_degree,
                       "truncation bound for the jet oracle");

    CLI::App* batch = app.add_subcommand("batch", "verify pairs from a file, one per line: vars ; f ; g");
    batch->add_option("--input", input_path, "input file")->required();
    add_format(batch);
    batch->add_flag("--oracle", oracle, "re-derive every dimension with the jet oracle");
    batch->add_option("--oracle-max-degree", oracle_max_degree,
                      "truncation bound for the jet oracle");

    CLI::App* invariant = app.add_subcommand("invariant", "compute a single invariant");
    invariant->add_option("--vars", vars, "comma-separated variable names")->required();
    invariant
        ->add_option("--which", which,
                     "milnor | tjurina | bruce_roberts | mu_G | mu_BR_rel | mu_fV")
        ->required();
    invariant->add_option("--f", f_text, "polynomial f")->required();
    invariant->add_option("--g", g_text, "polynomial g (pair invariants only)");
    add_format(invariant);

    CLI11_PARSE(app, argc, argv);

    VerifyOptions opts;
    opts.with_oracle = oracle;
    opts.oracle_max_degree = oracle_max_degree;

    if (verify->parsed()) {
        Outcome out = run_verify(vars, f_text, g_text, opts);
        emit(out, format);
        return out.code;
    }

    if (batch->parsed()) {
        std::ifstream in(input_path);
        if (!in) {
            std::cerr << "cannot open input file: " << input_path << "\n";
            return kInput;
        }
        int worst = kOk;
        OrderedJson arr = OrderedJson::array();
        std::string text;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (trim(line).empty()) continue;
            std::vector<std::string> parts = split(line, ';');
            Outcome out;
            if (parts.size() != 3) {
                out.code = kInput;
                out.json = input_error_json("line " + std::to_string(lineno) +
                                            ": expected 'vars ; f ; g'");
                out.text = "error (input): line " + std::to_string(lineno) +
                           ": expected 'vars ; f ; g'\n";
            } else {
                out = run_verify(parts[0], parts[1], parts[2], opts);
            }
            worst = std::max(worst, out.code);
            arr.push_back(out.json);
            text += out.text + "\n";
        }
        if (format == "json")
            std::cout << arr.dump(2) << "\n";
        else
            std::cout << text;
        return worst;
    }

    Outcome out = run_invariant(which, vars, f_text, g_text);
    emit(out, format);
    return out.code;
}
