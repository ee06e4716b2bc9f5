// gdet: evaluate, classify, witness, verify and search integer group
// determinant values of C4 x C2 x C2 (and classify the other order-16
// value sets). Every command prints exactly one result envelope on
// stdout, human-readable by default, JSON with --json.
//
// Exit codes: 0 success / member / all checks passed; 1 clean negative
// (non-member, violations found, failed checks); 2 internal invariant
// breach (e.g. the two determinant routes disagree); 64 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gdet/group_determinant.hpp"
#include "gdet/numtheory.hpp"
#include "gdet/sets.hpp"
#include "gdet/verify.hpp"
#include "gdet/witness.hpp"

using json = nlohmann::ordered_json;
using gdet::Int;

namespace {

constexpr int kExitMember = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInternal = 2;
constexpr int kExitUsage = 64;

// Accepts plain decimal and the shorthand 2^k or 2^k*m (m signed decimal),
// e.g. "2^16*7", "-2^16*3", "2^18". The shorthand avoids hand-expanding
// the powers of two where the interesting family boundaries live.
std::optional<Int> parse_integer(const std::string& text) {
    std::string s = text;
    bool negate = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negate = s[0] == '-';
        s.erase(0, 1);
    }
    if (s.empty()) return std::nullopt;

    Int value;
    if (s.rfind("2^", 0) == 0) {
        std::string rest = s.substr(2);
        const std::size_t star = rest.find('*');
        std::string exp_part = rest.substr(0, star);
        if (exp_part.empty() || exp_part.find_first_not_of("0123456789") != std::string::npos)
            return std::nullopt;
        if (exp_part.size() > 6) return std::nullopt;  // keep shifts sane
        const unsigned k = std::stoul(exp_part);
        if (k > 1'000'000) return std::nullopt;
        Int multiplier = 1;
        if (star != std::string::npos) {
            const auto m = parse_integer(rest.substr(star + 1));
            if (!m) return std::nullopt;
            multiplier = *m;
        }
        value = (Int(1) << k) * multiplier;
    } else {
        if (s.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
        value = Int(s);
    }
    return negate ? Int(-value) : value;
}

json to_json(const gdet::QuadVec& q) {
    json a = json::array();
    for (const Int& x : q) a.push_back(x.str());
    return a;
}

json to_json(const gdet::CoeffVec16& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(x.str());
    return a;
}

json to_json(const gdet::Classification& c, const Int& value, gdet::GroupTag group) {
    json p = json::object();
    for (const auto& [name, val] : c.params) p[name] = val.str();
    return json{{"value", value.str()},
                {"group", gdet::to_string(group)},
                {"member", c.member},
                {"family", gdet::to_string(c.family)},
                {"params", p},
                {"reason", c.reason}};
}

json to_json(const gdet::Witness& w) {
    return json{{"target", w.target.str()},
                {"family", gdet::to_string(w.family)},
                {"coeffs", to_json(w.coeffs)},
                {"verified", w.verified}};
}

json to_json(const gdet::LemmaReport& r) {
    return json{{"lemma", r.lemma},
                {"checked", r.checked},
                {"vacuous", r.vacuous},
                {"passed", r.passed},
                {"inconclusive", r.inconclusive},
                {"counterexample", r.counterexample ? json(*r.counterexample) : json(nullptr)},
                {"notes", r.notes}};
}

constexpr std::size_t kMaxViolationsShown = 16;

json to_json(const gdet::SearchSummary& s, const std::string& mode) {
    json viols = json::array();
    for (std::size_t i = 0; i < s.violations.size() && i < kMaxViolationsShown; ++i)
        viols.push_back(json{{"coeffs", to_json(s.violations[i].first)},
                             {"value", s.violations[i].second.str()}});
    return json{{"mode", mode},
                {"vectors_tested", s.vectors_tested},
                {"values_seen", s.values_seen},
                {"violation_count", s.violations.size()},
                {"violations", viols}};
}

// ---- output ----------------------------------------------------------------

struct Output {
    bool as_json = false;
    std::string command;

    void emit_ok(const json& payload) const {
        if (as_json) {
            json env{{"schema", 1}, {"command", command}, {"ok", true}, {"payload", payload}};
            std::cout << env.dump(2) << "\n";
        } else {
            std::cout << "command: " << command << "\n";
            print_human(payload, "");
        }
    }

    void emit_error(const std::string& code, const std::string& message) const {
        if (as_json) {
            json env{{"schema", 1},
                     {"command", command},
                     {"ok", false},
                     {"error", {{"code", code}, {"message", message}}}};
            std::cout << env.dump(2) << "\n";
        } else {
            std::cout << "command: " << command << "\nerror: " << code << "\n  " << message
                      << "\n";
        }
    }

    static void print_human(const json& value, const std::string& indent) {
        if (value.is_object()) {
            for (const auto& [key, sub] : value.items()) {
                if (sub.is_object() || (sub.is_array() && !sub.empty() && sub[0].is_object())) {
                    std::cout << indent << key << ":\n";
                    print_human(sub, indent + "  ");
                } else if (sub.is_array()) {
                    std::cout << indent << key << ":";
                    for (const auto& x : sub) std::cout << " " << flat(x);
                    std::cout << "\n";
                } else {
                    std::cout << indent << key << ": " << flat(sub) << "\n";
                }
            }
        } else if (value.is_array()) {
            for (const auto& sub : value) {
                print_human(sub, indent + "  ");
                std::cout << "\n";
            }
        } else {
            std::cout << indent << flat(value) << "\n";
        }
    }

    static std::string flat(const json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_null()) return "-";
        return v.dump();
    }
};

Int require_integer(const std::string& text, const char* what) {
    auto v = parse_integer(text);
    if (!v)
        throw CLI::ValidationError(std::string(what) + ": '" + text +
                                   "' is not an integer (decimal or 2^k*m)");
    return *v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"integer group determinant toolkit for C4 x C2 x C2"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    bool flag_json = false;
    std::uint64_t flag_seed = 42;
    unsigned flag_threads = 0;
    if (const char* env = std::getenv("GDET_THREADS")) flag_threads = std::atoi(env);
    app.add_flag("--json", flag_json, "emit the result envelope as JSON");
    app.add_option("--seed", flag_seed, "seed for randomized commands")->capture_default_str();
    app.add_option("--threads", flag_threads, "worker threads (0 = hardware)")
        ->capture_default_str();

    // eval
    auto* cmd_eval = app.add_subcommand("eval", "evaluate the determinant of 16 coefficients");
    cmd_eval->fallthrough();
    std::vector<std::string> eval_coeffs;
    bool eval_oracle = false;
    cmd_eval->add_option("coeffs", eval_coeffs, "16 integers, index order 0..15")
        ->expected(16)
        ->required();
    cmd_eval->add_flag("--oracle", eval_oracle,
                       "also run the 16x16 matrix route and compare");

    // classify
    auto* cmd_classify = app.add_subcommand("classify", "decide membership of a value");
    cmd_classify->fallthrough();
    std::string classify_value;
    std::string classify_group = "C4xC2xC2";
    cmd_classify->add_option("value", classify_value, "candidate determinant value")->required();
    cmd_classify->add_option("--group", classify_group,
                             "C4 | C2x2x2x2 | C4xC2xC2 | C4xC4 | C8xC2 | D16 | C16");

    // witness
    auto* cmd_witness = app.add_subcommand("witness", "synthesize a verified coefficient vector");
    cmd_witness->fallthrough();
    std::string witness_value;
    std::string witness_emit_file;
    cmd_witness->add_option("value", witness_value, "target determinant value")->required();
    cmd_witness->add_option("--emit-file", witness_emit_file,
                            "write the witness record to PATH as JSON lines");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run an empirical verification suite");
    cmd_verify->fallthrough();
    std::string verify_suite;
    std::string verify_bound;
    std::uint64_t verify_samples = 100'000;
    std::uint64_t verify_quota = 100;
    bool allow_inconclusive = false;
    cmd_verify
        ->add_option("suite", verify_suite, "remarks | lemma32 | lemma44 | lemma45-410 | chain | all")
        ->required();
    cmd_verify->add_option("--bound", verify_bound,
                           "entry bound (remarks 3, lemma44 8, lemma45-410 32, chain 2^26)");
    cmd_verify->add_option("--samples", verify_samples, "sample count for chain")
        ->capture_default_str();
    cmd_verify->add_option("--quota", verify_quota, "non-vacuous case quota for lemma45-410")
        ->capture_default_str();
    cmd_verify->add_flag("--allow-inconclusive", allow_inconclusive,
                         "exit 0 even if a strictness search was inconclusive");

    // search
    auto* cmd_search = app.add_subcommand("search", "determinant/classifier cross-validation");
    cmd_search->fallthrough();
    std::string search_mode = "random";
    std::uint64_t search_budget = 1'000'000;
    int search_entry_bound = 3;
    cmd_search->add_option("--mode", search_mode, "exhaustive01 | random")->capture_default_str();
    cmd_search->add_option("--budget", search_budget, "number of random vectors")
        ->capture_default_str();
    cmd_search->add_option("--entry-bound", search_entry_bound,
                           "entries drawn uniformly from [-bound, bound]")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    Output out;
    out.as_json = flag_json;

    try {
        if (cmd_eval->parsed()) {
            out.command = "eval";
            gdet::CoeffVec16 a;
            for (int i = 0; i < 16; ++i) a[i] = require_integer(eval_coeffs[i], "coeffs");
            const gdet::BcdeTransform t = gdet::bcde_transform(a);
            const Int fb = gdet::det_c4(t.b), fc = gdet::det_c4(t.c), fd = gdet::det_c4(t.d),
                      fe = gdet::det_c4(t.e);
            const Int value = fb * fc * fd * fe;
            json payload{{"value", value.str()},
                         {"b", to_json(t.b)},
                         {"c", to_json(t.c)},
                         {"d", to_json(t.d)},
                         {"e", to_json(t.e)},
                         {"d4_factors", json::array({fb.str(), fc.str(), fd.str(), fe.str()})}};
            if (eval_oracle) {
                const Int oracle = gdet::det_c4c2c2_matrix(a);
                payload["oracle_value"] = oracle.str();
                payload["agree"] = oracle == value;
                if (oracle != value) {
                    out.emit_error("oracle_mismatch",
                                   "factorized route " + value.str() +
                                       " disagrees with matrix route " + oracle.str());
                    return kExitInternal;
                }
            }
            out.emit_ok(payload);
            return kExitMember;
        }

        if (cmd_classify->parsed()) {
            out.command = "classify";
            const Int v = require_integer(classify_value, "value");
            const auto group = gdet::parse_group(classify_group);
            if (!group) throw CLI::ValidationError("unknown group '" + classify_group + "'");
            const gdet::Classification c = gdet::classify_group(*group, v);
            out.emit_ok(to_json(c, v, *group));
            return c.member ? kExitMember : kExitNegative;
        }

        if (cmd_witness->parsed()) {
            out.command = "witness";
            const Int v = require_integer(witness_value, "value");
            try {
                const gdet::Witness w = gdet::synthesize(v);
                if (!witness_emit_file.empty()) {
                    std::ofstream f(witness_emit_file);
                    if (!f) throw CLI::ValidationError("cannot open " + witness_emit_file);
                    f << to_json(w).dump() << "\n";
                }
                out.emit_ok(to_json(w));
                return kExitMember;
            } catch (const gdet::NonMemberError& e) {
                out.emit_error("non_member", e.classification.reason);
                return kExitNegative;
            }
        }

        if (cmd_verify->parsed()) {
            out.command = "verify";
            std::vector<gdet::LemmaReport> reports;
            const bool have_bound = !verify_bound.empty();
            const auto bound_int = [&](int fallback) {
                if (!have_bound) return fallback;
                const Int b = require_integer(verify_bound, "bound");
                if (b < 1 || b > 1'000'000)
                    throw CLI::ValidationError("bound out of range for this suite");
                return int(b.convert_to<long>());
            };
            const auto bound_big = [&](const Int& fallback) {
                return have_bound ? require_integer(verify_bound, "bound") : fallback;
            };
            const auto run_suite = [&](const std::string& suite) {
                if (suite == "remarks") {
                    reports.push_back(gdet::check_remarks(bound_int(3), flag_threads));
                } else if (suite == "lemma32") {
                    reports.push_back(gdet::check_lemma32());
                } else if (suite == "lemma44") {
                    reports.push_back(gdet::check_lemma44(bound_int(8), flag_threads));
                } else if (suite == "lemma45-410") {
                    auto batch =
                        gdet::check_lemmas45_410(bound_int(32), verify_quota, flag_threads);
                    reports.insert(reports.end(), batch.begin(), batch.end());
                } else if (suite == "chain") {
                    reports.push_back(gdet::check_inclusion_chain(
                        verify_samples, bound_big(Int(1) << 26), flag_seed));
                } else {
                    throw CLI::ValidationError("unknown suite '" + suite + "'");
                }
            };
            if (verify_suite == "all") {
                for (const char* s : {"remarks", "lemma32", "lemma44", "lemma45-410", "chain"})
                    run_suite(s);
            } else {
                run_suite(verify_suite);
            }
            json payload = json::array();
            bool all_passed = true, any_inconclusive = false;
            for (const auto& r : reports) {
                payload.push_back(to_json(r));
                all_passed = all_passed && r.passed;
                any_inconclusive = any_inconclusive || r.inconclusive;
            }
            out.emit_ok(json{{"reports", payload}});
            if (!all_passed) return kExitNegative;
            if (any_inconclusive && !allow_inconclusive) return kExitNegative;
            return kExitMember;
        }

        if (cmd_search->parsed()) {
            out.command = "search";
            gdet::SearchMode mode;
            if (search_mode == "exhaustive01")
                mode = gdet::SearchMode::Exhaustive01;
            else if (search_mode == "random")
                mode = gdet::SearchMode::Random;
            else
                throw CLI::ValidationError("unknown mode '" + search_mode + "'");
            if (search_budget < 1) throw CLI::ValidationError("budget must be >= 1");
            const gdet::SearchSummary s = gdet::search_cross_validate(
                mode, search_budget, search_entry_bound, flag_seed, flag_threads);
            out.emit_ok(to_json(s, search_mode));
            return s.violations.empty() ? kExitMember : kExitNegative;
        }
    } catch (const CLI::ValidationError& e) {
        out.emit_error("usage", e.what());
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        out.emit_error("usage", e.what());
        return kExitUsage;
    } catch (const std::domain_error& e) {
        out.emit_error("domain", e.what());
        return kExitUsage;
    } catch (const gdet::InternalError& e) {
        out.emit_error("internal", e.what());
        return kExitInternal;
    } catch (const std::exception& e) {
        out.emit_error("internal", e.what());
        return kExitInternal;
    }
    return kExitUsage;
}
