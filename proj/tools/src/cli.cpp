#include "infix_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "infix/bench.hpp"
#include "infix/engine.hpp"
#include "infix/errors.hpp"
#include "infix/language.hpp"

namespace infix::cli {

namespace {

struct ScriptError : std::invalid_argument {
    ScriptError(std::size_t line, const std::string& what)
        : std::invalid_argument("script line " + std::to_string(line) + ": " + what) {}
};

std::string letters_of(const Alphabet& sigma, LetterMask m) {
    std::string s;
    for (std::size_t a = 0; a < sigma.size(); ++a)
        if (has_letter(m, static_cast<Letter>(a))) {
            if (!s.empty()) s += ',';
            s += sigma.symbol(static_cast<Letter>(a));
        }
    return s.empty() ? "none" : s;
}

int cmd_classify(const std::string& path, std::ostream& out) {
    Language lang = load_language(path);
    Plan plan = plan_language(lang);
    if (!plan.report) throw MonoidTooLarge("syntactic monoid too large to classify");
    const auto& r = *plan.report;
    auto b = [](bool v) { return v ? "true" : "false"; };
    out << "is_zg: " << b(r.is_zg) << '\n';
    out << "is_aperiodic: " << b(r.is_aperiodic) << '\n';
    out << "is_extensible: " << b(r.is_extensible) << '\n';
    out << "is_semi_extensible_zg: " << b(r.is_semi_extensible_zg) << '\n';
    out << "threshold: " << (r.threshold ? std::to_string(*r.threshold) : "none") << '\n';
    out << "neutral: " << letters_of(lang.sigma, r.neutral) << '\n';
    out << "monoid_size: " << r.monoid_size << '\n';
    out << "strategy: " << to_string(plan.strategy) << '\n';
    if (plan.threshold_in_use && plan.threshold_in_use != r.threshold)
        out << "threshold_in_use: " << *plan.threshold_in_use << '\n';
    return kOk;
}

std::vector<std::string> split_commands(const std::string& script) {
    std::vector<std::string> cmds;
    std::string cur;
    for (char c : script) {
        if (c == '\n' || c == ';') {
            cmds.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    cmds.push_back(cur);
    return cmds;
}

}  // namespace

int run_script(const std::string& lang_path, const std::string& word, const std::string& script, bool sorted,
               std::ostream& out, std::ostream& err) {
    try {
        Language lang = load_language(lang_path);
        Word w;
        try {
            w = lang.sigma.encode(word);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(std::string("word: ") + e.what());
        }
        if (w.empty()) throw std::invalid_argument("word must be nonempty");
        Engine engine(lang, w);
        auto cmds = split_commands(script);
        for (std::size_t ln = 1; ln <= cmds.size(); ++ln) {
            std::istringstream ss(cmds[ln - 1]);
            std::string op;
            if (!(ss >> op) || op[0] == '#') continue;
            if (op == "sub") {
                long long pos = 0;
                std::string letter;
                if (!(ss >> pos >> letter)) throw ScriptError(ln, "usage: sub <pos> <letter>");
                if (pos < 1 || pos > static_cast<long long>(engine.size())) throw ScriptError(ln, "position out of range");
                if (letter.size() != 1 || !lang.sigma.find(letter[0])) throw ScriptError(ln, "letter not in alphabet");
                engine.update(static_cast<Pos>(pos), *lang.sigma.find(letter[0]));
            } else if (op == "enum") {
                auto cur = engine.enumerate();
                if (sorted) {
                    std::vector<Infix> all;
                    while (auto x = cur->next()) all.push_back(*x);
                    std::sort(all.begin(), all.end());
                    for (auto x : all) out << x.l << ' ' << x.r << '\n';
                } else {
                    while (auto x = cur->next()) out << x->l << ' ' << x->r << '\n';
                }
            } else if (op == "member") {
                out << (engine.member() ? "yes" : "no") << '\n';
            } else if (op == "count-results") {
                auto cur = engine.enumerate();
                std::uint64_t c = 0;
                while (cur->next()) ++c;
                out << c << '\n';
            } else {
                throw ScriptError(ln, "unknown command '" + op + "'");
            }
            std::string extra;
            if (ss >> extra) throw ScriptError(ln, "unexpected argument '" + extra + "'");
        }
        return kOk;
    } catch (const UnsupportedLanguage& e) {
        err << "error: " << e.what() << '\n';
        return kUnsupported;
    } catch (const MonoidTooLarge& e) {
        err << "error: " << e.what() << '\n';
        return kUnsupported;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dynamic enumeration of the infixes of a word that belong to a regular language"};
    app.require_subcommand(1);

    std::string lang_path;
    auto* classify = app.add_subcommand("classify", "Classify a language and print the selected strategy");
    classify->add_option("lang", lang_path, "Language file")->required();

    std::string word, script_path, script_text;
    bool sorted = false;
    auto* run = app.add_subcommand("run", "Run a script of substitutions and queries");
    run->add_option("--lang", lang_path, "Language file")->required();
    run->add_option("--word", word, "Initial word")->required();
    auto* sp = run->add_option("--script", script_path, "Script file");
    auto* se = run->add_option("-e,--exec", script_text, "Inline script, commands separated by ';'");
    sp->excludes(se);
    run->add_flag("--sorted", sorted, "Print enumeration results in lexicographic order");

    std::vector<Pos> sizes;
    std::uint64_t seed = 1;
    std::uint32_t ops = 50;
    std::string out_path;
    bool allow_oracle = false;
    auto* bench = app.add_subcommand("bench", "Measure op counts and memory cells");
    bench->add_option("--lang", lang_path, "Language file")->required();
    bench->add_option("--sizes", sizes, "Word lengths")->delimiter(',')->required();
    bench->add_option("--seed", seed, "Random seed");
    bench->add_option("--ops", ops, "Substitutions per round");
    bench->add_option("--out", out_path, "Output CSV")->required();
    bench->add_flag("--allow-oracle", allow_oracle, "Allow the brute-force strategy");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (classify->parsed()) return cmd_classify(lang_path, out);
        if (run->parsed()) {
            std::string script = script_text;
            if (!script_path.empty()) {
                std::ifstream in(script_path);
                if (!in) throw std::invalid_argument("cannot open script " + script_path);
                std::stringstream ss;
                ss << in.rdbuf();
                script = ss.str();
            }
            return run_script(lang_path, word, script, sorted, out, err);
        }
        if (bench->parsed()) {
            Language lang = load_language(lang_path);
            Workload wl = uniform_workload(lang);
            wl.updates_per_round = ops;
            BenchReport rep;
            for (Pos n : sizes) {
                if (n == 0) throw std::invalid_argument("sizes must be positive");
                rep.push_back(profile_enumeration(lang, n, seed, wl, allow_oracle));
            }
            emit_csv(rep, std::filesystem::path(out_path));
            return kOk;
        }
    } catch (const UnsupportedLanguage& e) {
        err << "error: " << e.what() << '\n';
        return kUnsupported;
    } catch (const MonoidTooLarge& e) {
        err << "error: " << e.what() << '\n';
        return kUnsupported;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace infix::cli
