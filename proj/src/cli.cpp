#include "moqa/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "moqa/decision.hpp"
#include "moqa/dfa.hpp"
#include "moqa/error.hpp"
#include "moqa/monoid.hpp"
#include "moqa/qfa_format.hpp"
#include "moqa/quantum.hpp"

namespace moqa::cli {

namespace {

std::string fixed12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", x);
    return buf;
}

// Cut points are dyadic, so the shortest round-trip form is exact.
std::string shortest(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string render_word(const Word& w) { return w.empty() ? "<empty>" : word_to_string(w); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Letters may be given as separate tokens ("a b") or packed ("ab").
PTSpec make_spec(const std::vector<std::string>& letter_args, const std::string& alphabet) {
    std::string letters;
    for (const auto& tok : letter_args) {
        letters += tok;
    }
    return PTSpec::from_chars(letters, alphabet);
}

struct SpecArgs {
    std::vector<std::string> letters;
    std::string alphabet;
};

void add_spec_options(CLI::App* cmd, SpecArgs& args, bool alphabet_required) {
    cmd->add_option("--letters", args.letters, "letter sequence a1 ... ak (adjacent letters distinct)")
        ->expected(0, -1);
    auto* alpha = cmd->add_option("--alphabet", args.alphabet, "alphabet symbols, e.g. ab");
    if (alphabet_required) {
        alpha->required();
    }
}

int cmd_synth(const SpecArgs& args, const std::string& emit, std::ostream& out) {
    const PTSpec spec = make_spec(args.letters, args.alphabet);
    const Mon1qfa a = build_mon1qfa(spec);
    const auto [lambda, delta] = cutpoint_params(spec);
    out << "letters: " << spec.to_string() << '\n';
    out << "alphabet: " << spec.alphabet().to_string() << '\n';
    out << "dim: " << a.dimension() << '\n';
    out << "lambda: " << shortest(lambda) << '\n';
    out << "delta: " << shortest(delta) << '\n';
    if (!emit.empty()) {
        std::ofstream file(emit, std::ios::binary);
        if (!file) {
            throw InputError("cannot write '" + emit + "'");
        }
        file << "# measure-only automaton for letters [" << spec.to_string() << "]\n";
        file << serialize_mon1qfa(a);
        out << "emitted: " << emit << '\n';
    }
    return kOk;
}

int cmd_prob(const SpecArgs& args, const std::string& qfa_path, const std::string& word,
             std::ostream& out) {
    const Mon1qfa a = qfa_path.empty() ? build_mon1qfa(make_spec(args.letters, args.alphabet))
                                       : parse_mon1qfa(read_file(qfa_path));
    out << "probability: " << fixed12(acceptance_probability(a, word_from_chars(word))) << '\n';
    return kOk;
}

int cmd_verify(const SpecArgs& args, std::size_t max_len, std::size_t budget, std::ostream& out) {
    const auto r = verify_construction(make_spec(args.letters, args.alphabet), max_len, budget);
    auto list = [&](const char* key, const std::vector<Word>& words) {
        out << key << ':';
        for (const auto& w : words) {
            out << ' ' << render_word(w);
        }
        out << '\n';
    };
    out << "letters: " << r.spec.to_string() << '\n';
    out << "alphabet: " << r.spec.alphabet().to_string() << '\n';
    out << "lambda: " << shortest(r.lambda) << '\n';
    out << "delta: " << shortest(r.delta) << '\n';
    out << "max_len: " << r.max_len << '\n';
    out << "words_checked: " << r.words_checked << '\n';
    out << "min_margin: " << fixed12(r.min_margin) << '\n';
    out << "misclassified_count: " << r.misclassified.size() << '\n';
    list("misclassified", r.misclassified);
    out << "isolation_violation_count: " << r.isolation_violations.size() << '\n';
    list("isolation_violations", r.isolation_violations);
    out << "result: " << (r.pass() ? "PASS" : "FAIL") << '\n';
    return r.pass() ? kOk : kNegative;
}

int cmd_check(const std::string& path, std::ostream& out) {
    const Diagnosis d = is_lmo_member(parse_dfa(read_file(path)));
    out << "minimal_states: " << d.minimal_state_count << '\n';
    out << "literally_idempotent: " << yes_no(d.literally_idempotent) << '\n';
    out << "partially_ordered: " << yes_no(d.partially_ordered) << '\n';
    out << "piecewise_testable: " << yes_no(d.piecewise_testable) << '\n';
    out << "failure_reason: " << (d.failure_reason ? to_string(*d.failure_reason) : "none") << '\n';
    if (d.verdict) {
        out << "verdict: MEMBER\n";
    } else {
        out << "verdict: NON-MEMBER (" << to_string(*d.failure_reason) << ")\n";
    }
    return d.verdict ? kOk : kNegative;
}

int cmd_monoid(const std::string& path, std::size_t cap, std::ostream& out) {
    const Dfa min = minimize(parse_dfa(read_file(path)));
    const GreenReport r = green_report(min, cap);
    out << "minimal_states: " << min.state_count() << '\n';
    out << "size: " << r.monoid_size << '\n';
    out << "idempotents: " << r.idempotent_count << '\n';
    out << "r_trivial: " << yes_no(r.r_trivial) << '\n';
    out << "l_trivial: " << yes_no(r.l_trivial) << '\n';
    out << "j_trivial: " << yes_no(r.j_trivial) << '\n';
    out << "block_group: " << yes_no(r.block_group) << '\n';
    out << "letters_idempotent: " << yes_no(r.letters_idempotent) << '\n';
    return kOk;
}

int cmd_variation(const std::string& path, const std::optional<std::string>& word, std::ostream& out) {
    const Dfa min = minimize(parse_dfa(read_file(path)));
    out << "minimal_states: " << min.state_count() << '\n';
    if (word) {
        out << "variation: " << variation(min, word_from_chars(*word)) << '\n';
        return kOk;
    }
    const SupVariation sup = sup_variation(min);
    out << "partially_ordered: " << yes_no(sup.finite()) << '\n';
    out << "sup: " << sup.to_string() << '\n';
    if (sup.finite()) {
        out << "witness: " << render_word(sup.witness) << '\n';
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Measure-only quantum automata and piecewise testable languages", "moqa"};
    app.require_subcommand(1);

    SpecArgs synth_args;
    std::string emit;
    auto* synth = app.add_subcommand("synth", "build the automaton for a shuffle ideal");
    add_spec_options(synth, synth_args, true);
    synth->add_option("--emit", emit, "write the automaton to this file");

    SpecArgs prob_args;
    std::string qfa_path;
    std::string prob_word;
    auto* prob = app.add_subcommand("prob", "acceptance probability of a word");
    add_spec_options(prob, prob_args, false);
    auto* qfa_opt = prob->add_option("--qfa", qfa_path, "automaton file written by synth --emit");
    prob->add_option("--word", prob_word, "input word (\"\" for the empty word)")->required();
    qfa_opt->excludes(prob->get_option("--alphabet"));
    qfa_opt->excludes(prob->get_option("--letters"));

    SpecArgs verify_args;
    std::size_t max_len = 0;
    std::size_t budget = kDefaultWordBudget;
    auto* verify = app.add_subcommand("verify", "check the cut point on all words up to a length");
    add_spec_options(verify, verify_args, true);
    verify->add_option("--maxlen", max_len, "longest word length")->required();
    verify->add_option("--budget", budget, "maximum number of words to enumerate");

    std::string check_path;
    auto* check = app.add_subcommand("check", "decide membership of a DFA language");
    check->add_option("dfa", check_path, "DFA file")->required();

    std::string monoid_path;
    std::size_t cap = kDefaultMonoidCap;
    auto* monoid = app.add_subcommand("monoid", "syntactic monoid diagnostics");
    monoid->add_option("dfa", monoid_path, "DFA file")->required();
    monoid->add_option("--cap", cap, "maximum monoid size");

    std::string variation_path;
    std::optional<std::string> variation_word;
    auto* var = app.add_subcommand("variation", "variation of a word or its supremum");
    var->add_option("dfa", variation_path, "DFA file")->required();
    var->add_option("--word", variation_word, "input word");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (*synth) return cmd_synth(synth_args, emit, out);
        if (*prob) {
            if (qfa_path.empty() && prob_args.alphabet.empty()) {
                throw InputError("prob needs --alphabet (with --letters) or --qfa");
            }
            return cmd_prob(prob_args, qfa_path, prob_word, out);
        }
        if (*verify) return cmd_verify(verify_args, max_len, budget, out);
        if (*check) return cmd_check(check_path, out);
        if (*monoid) return cmd_monoid(monoid_path, cap, out);
        if (*var) return cmd_variation(variation_path, variation_word, out);
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kResource;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace moqa::cli
