// gsco — command-line frontend over the C API in gsco.h.
//
// Operands are written auto:FILE.aut, re:EXPR, or words:FILE.words.
// Exit codes: 0 success, 1 usage, 2 parse error, 3 semantic error,
// 4 cap exceeded; `eqv` exits 5 when the languages differ.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <gsco.h>

namespace {

struct AutomatonDeleter {
    void operator()(gsco_automaton* m) const { gsco_automaton_free(m); }
};
struct RulesDeleter {
    void operator()(gsco_rules* r) const { gsco_rules_free(r); }
};
using AutomatonPtr = std::unique_ptr<gsco_automaton, AutomatonDeleter>;
using RulesPtr = std::unique_ptr<gsco_rules, RulesDeleter>;

struct StringDeleter {
    void operator()(char* s) const { gsco_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

/// A failure that already maps to a process exit code.
struct ExitWith {
    int code;
};

[[noreturn]] void fail(int code, const std::string& message) {
    std::cerr << "gsco: " << message << '\n';
    throw ExitWith{code};
}

[[noreturn]] void fail_api(gsco_status status) {
    fail(static_cast<int>(status), gsco_last_error());
}

void check(gsco_status status) {
    if (status != GSCO_OK) {
        fail_api(status);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(1, "cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

AutomatonPtr load_operand(const std::string& spec) {
    gsco_automaton* raw = nullptr;
    if (spec.rfind("auto:", 0) == 0) {
        check(gsco_automaton_from_aut_text(read_file(spec.substr(5)).c_str(),
                                           &raw));
    } else if (spec.rfind("re:", 0) == 0) {
        check(gsco_automaton_from_regex(spec.substr(3).c_str(), &raw));
    } else if (spec.rfind("words:", 0) == 0) {
        check(gsco_automaton_from_word_list(
            read_file(spec.substr(6)).c_str(), &raw));
    } else {
        fail(1, "operand '" + spec +
                    "' must start with auto:, re:, or words:");
    }
    return AutomatonPtr(raw);
}

/// Options shared by the automaton-producing subcommands.
struct BuildOptions {
    std::string rules = "all";
    std::string rule_file;
    std::optional<std::size_t> max_len;
    std::string out_path;
    bool minimize = false;
    bool report = false;

    void attach(CLI::App* cmd, bool with_rules = true) {
        if (with_rules) {
            auto* r = cmd->add_option(
                "--rules", rules,
                "overlap symbols: 'all', or a comma-separated list");
            cmd->add_option("--rule-file", rule_file,
                            "file of rules, one per line")
                ->excludes(r);
        }
        cmd->add_option("--max-len", max_len,
                        "also print the words of length <= N");
        cmd->add_option("--out", out_path,
                        "write the automaton to this file");
        cmd->add_flag("--minimize", minimize,
                      "minimize before writing/printing");
        cmd->add_flag("--report", report, "print the bridge table");
    }

    RulesPtr load_rules() const {
        const std::string text =
            rule_file.empty() ? rules : read_file(rule_file);
        gsco_rules* raw = nullptr;
        check(gsco_rules_parse(text.c_str(), &raw));
        return RulesPtr(raw);
    }
};

void deliver(AutomatonPtr m, const BuildOptions& opt, ApiString report) {
    if (opt.minimize) {
        gsco_automaton* reduced = nullptr;
        check(gsco_minimize(m.get(), &reduced));
        m.reset(reduced);
    }
    if (report != nullptr) {
        std::cout << report.get();
    }
    char* text = nullptr;
    check(gsco_automaton_to_aut_text(m.get(), &text));
    ApiString aut_text(text);
    if (!opt.out_path.empty()) {
        std::ofstream out(opt.out_path, std::ios::binary);
        if (!out) {
            fail(1, "cannot write '" + opt.out_path + "'");
        }
        out << aut_text.get();
    }
    if (opt.max_len) {
        char* words = nullptr;
        check(gsco_enumerate(m.get(), *opt.max_len, &words));
        ApiString word_text(words);
        std::cout << word_text.get();
    } else if (opt.out_path.empty()) {
        std::cout << aut_text.get();
    }
}

int run(int argc, char** argv) {
    CLI::App app{"generalized sequential crossover and splicing toolkit"};
    app.require_subcommand(1);

    std::string operand_a, operand_b, word_text;

    auto* cross = app.add_subcommand(
        "cross", "crossover product GSCO_R of two languages");
    auto* closure = app.add_subcommand(
        "closure", "iterated-crossover closure GSCO*_R of one language");
    auto* star_pair = app.add_subcommand(
        "star-pair", "two-language closure GSCO*_R(L1,L2)");
    auto* splice = app.add_subcommand(
        "splice", "generalized splicing GS(L1,L2,R)");
    auto* member = app.add_subcommand("member", "test one word");
    auto* enumerate = app.add_subcommand(
        "enum", "list accepted words up to a length");
    auto* eqv = app.add_subcommand("eqv", "compare two languages");
    auto* minimize = app.add_subcommand("min", "minimal DFA");
    auto* oracle = app.add_subcommand(
        "oracle", "bounded word-level reference computations");
    oracle->require_subcommand(1);
    auto* oracle_closure =
        oracle->add_subcommand("closure", "bounded closure of a word list");
    auto* oracle_pair = oracle->add_subcommand(
        "pair", "bounded two-language closure of word lists");
    auto* oracle_gs =
        oracle->add_subcommand("gs", "bounded splicing closure of word lists");

    BuildOptions cross_opt, closure_opt, star_opt, splice_opt, min_opt;
    bool star_base = true;
    bool splice_base = false;

    cross->add_option("M1", operand_a)->required();
    cross->add_option("M2", operand_b)->required();
    cross_opt.attach(cross);

    closure->add_option("M", operand_a)->required();
    closure_opt.attach(closure);

    star_pair->add_option("M1", operand_a)->required();
    star_pair->add_option("M2", operand_b)->required();
    star_opt.attach(star_pair);
    star_pair->add_flag("--include-base,!--no-include-base", star_base,
                        "union the operands into the result (default on)");

    splice->add_option("M1", operand_a)->required();
    splice->add_option("M2", operand_b)->required();
    splice_opt.attach(splice);
    splice->add_flag("--include-base,!--no-include-base", splice_base,
                     "union the operands into the result (default off)");

    member->add_option("M", operand_a)->required();
    member->add_option("WORD", word_text, "word to test (@eps for the empty word)")
        ->required();

    std::size_t enum_len = 0;
    enumerate->add_option("M", operand_a)->required();
    enumerate->add_option("--max-len", enum_len)->required();

    eqv->add_option("M1", operand_a)->required();
    eqv->add_option("M2", operand_b)->required();

    minimize->add_option("M", operand_a)->required();
    min_opt.attach(minimize, /*with_rules=*/false);

    std::string words_a, words_b, oracle_rules = "all";
    std::size_t oracle_len = 0;
    for (CLI::App* cmd : {oracle_closure, oracle_pair, oracle_gs}) {
        cmd->add_option("--rules", oracle_rules);
        cmd->add_option("--max-len", oracle_len)->required();
    }
    oracle_closure->add_option("WORDS", words_a, "word-list file")->required();
    oracle_pair->add_option("WORDS1", words_a)->required();
    oracle_pair->add_option("WORDS2", words_b)->required();
    oracle_gs->add_option("WORDS1", words_a)->required();
    oracle_gs->add_option("WORDS2", words_b)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (cross->parsed()) {
            AutomatonPtr m1 = load_operand(operand_a);
            AutomatonPtr m2 = load_operand(operand_b);
            RulesPtr rules = cross_opt.load_rules();
            gsco_automaton* raw = nullptr;
            char* table = nullptr;
            check(gsco_cross(m1.get(), m2.get(), rules.get(), &raw,
                             cross_opt.report ? &table : nullptr));
            deliver(AutomatonPtr(raw), cross_opt, ApiString(table));
        } else if (closure->parsed()) {
            AutomatonPtr m = load_operand(operand_a);
            RulesPtr rules = closure_opt.load_rules();
            gsco_automaton* raw = nullptr;
            char* table = nullptr;
            check(gsco_saturate(m.get(), rules.get(), &raw,
                                closure_opt.report ? &table : nullptr));
            deliver(AutomatonPtr(raw), closure_opt, ApiString(table));
        } else if (star_pair->parsed()) {
            AutomatonPtr m1 = load_operand(operand_a);
            AutomatonPtr m2 = load_operand(operand_b);
            RulesPtr rules = star_opt.load_rules();
            gsco_automaton* raw = nullptr;
            char* table = nullptr;
            check(gsco_star_pair(m1.get(), m2.get(), rules.get(),
                                 star_base ? 1 : 0, &raw,
                                 star_opt.report ? &table : nullptr));
            deliver(AutomatonPtr(raw), star_opt, ApiString(table));
        } else if (splice->parsed()) {
            AutomatonPtr m1 = load_operand(operand_a);
            AutomatonPtr m2 = load_operand(operand_b);
            RulesPtr rules = splice_opt.load_rules();
            gsco_automaton* raw = nullptr;
            char* table = nullptr;
            check(gsco_gs(m1.get(), m2.get(), rules.get(),
                          splice_base ? 1 : 0, &raw,
                          splice_opt.report ? &table : nullptr));
            deliver(AutomatonPtr(raw), splice_opt, ApiString(table));
        } else if (member->parsed()) {
            AutomatonPtr m = load_operand(operand_a);
            int yes = 0;
            check(gsco_member(m.get(), word_text.c_str(), &yes));
            std::cout << (yes ? "true" : "false") << '\n';
        } else if (enumerate->parsed()) {
            AutomatonPtr m = load_operand(operand_a);
            char* words = nullptr;
            check(gsco_enumerate(m.get(), enum_len, &words));
            std::cout << ApiString(words).get();
        } else if (eqv->parsed()) {
            AutomatonPtr m1 = load_operand(operand_a);
            AutomatonPtr m2 = load_operand(operand_b);
            int equal = 0;
            char* witness = nullptr;
            check(gsco_equivalent(m1.get(), m2.get(), &equal, &witness));
            ApiString w(witness);
            if (equal) {
                std::cout << "EQUIVALENT\n";
            } else {
                std::cout << "DIFFER " << (w ? w.get() : "?") << '\n';
                return 5;
            }
        } else if (minimize->parsed()) {
            AutomatonPtr m = load_operand(operand_a);
            gsco_automaton* raw = nullptr;
            check(gsco_minimize(m.get(), &raw));
            min_opt.minimize = false; // already minimal
            deliver(AutomatonPtr(raw), min_opt, nullptr);
        } else if (oracle->parsed()) {
            gsco_rules* raw_rules = nullptr;
            check(gsco_rules_parse(oracle_rules.c_str(), &raw_rules));
            RulesPtr rules(raw_rules);
            char* words = nullptr;
            if (oracle_closure->parsed()) {
                check(gsco_oracle_closure(read_file(words_a).c_str(),
                                          rules.get(), oracle_len, &words));
            } else if (oracle_pair->parsed()) {
                check(gsco_oracle_pair(read_file(words_a).c_str(),
                                       read_file(words_b).c_str(),
                                       rules.get(), oracle_len, &words));
            } else {
                check(gsco_oracle_gs(read_file(words_a).c_str(),
                                     read_file(words_b).c_str(), rules.get(),
                                     oracle_len, &words));
            }
            std::cout << ApiString(words).get();
        }
    } catch (const ExitWith& e) {
        return e.code;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
