#include "moqa/qfa_format.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>
#include <vector>

#include "moqa/error.hpp"

namespace moqa {

namespace {

std::string format_double(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    (void)ec;
    return std::string(buf, end);
}

std::string format_complex(Complex z) {
    return format_double(z.real()) + "," + format_double(z.imag());
}

void write_matrix(std::ostringstream& out, const ComplexMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out << (c == 0 ? "  " : " ") << format_complex(m(r, c));
        }
        out << '\n';
    }
}

void write_outcomes(std::ostringstream& out, const Observable& obs) {
    for (const auto& o : obs.outcomes()) {
        out << "outcome " << o.label << '\n';
        write_matrix(out, o.projector);
    }
}

struct Token {
    std::string text;
    std::size_t line;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        const auto line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && line[first] != '#') {
            std::istringstream in{std::string(line)};
            std::string tok;
            while (in >> tok) {
                tokens.push_back({tok, line_no});
            }
        }
        if (eol == std::string_view::npos) {
            break;
        }
        pos = eol + 1;
    }
    return tokens;
}

class TokenStream {
public:
    explicit TokenStream(std::vector<Token> tokens, std::size_t last_line)
        : tokens_(std::move(tokens)), last_line_(last_line) {}

    bool done() const { return pos_ >= tokens_.size(); }
    const Token* peek() const { return done() ? nullptr : &tokens_[pos_]; }
    std::size_t line() const { return done() ? last_line_ : tokens_[pos_].line; }

    const Token& next(const char* expected) {
        if (done()) {
            throw ParseError(last_line_, std::string("unexpected end of input, expected ") + expected);
        }
        return tokens_[pos_++];
    }

    void expect(std::string_view keyword) {
        const auto& t = next(std::string(keyword).c_str());
        if (t.text != keyword) {
            throw ParseError(t.line, "expected '" + std::string(keyword) + "', got '" + t.text + "'");
        }
    }

private:
    std::vector<Token> tokens_;
    std::size_t last_line_;
    std::size_t pos_ = 0;
};

double parse_real(std::string_view s, std::size_t line) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError(line, "malformed number '" + std::string(s) + "'");
    }
    if (!std::isfinite(v)) {
        throw ParseError(line, "non-finite number '" + std::string(s) + "'");
    }
    return v;
}

Complex parse_complex(const Token& t) {
    const auto comma = t.text.find(',');
    if (comma == std::string::npos) {
        throw ParseError(t.line, "expected re,im but got '" + t.text + "'");
    }
    std::string_view s = t.text;
    return {parse_real(s.substr(0, comma), t.line), parse_real(s.substr(comma + 1), t.line)};
}

std::string_view value_after(const Token& t, std::string_view key) {
    if (t.text.rfind(key, 0) != 0) {
        throw ParseError(t.line, "expected '" + std::string(key) + "...', got '" + t.text + "'");
    }
    return std::string_view(t.text).substr(key.size());
}

std::size_t parse_count(std::string_view s, std::size_t line) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError(line, "malformed count '" + std::string(s) + "'");
    }
    return v;
}

bool is_section_keyword(const std::string& s) {
    return s == "observable" || s == "end-observable" || s == "accepting:";
}

Observable parse_outcomes(TokenStream& in, std::size_t dim) {
    std::vector<Outcome> outcomes;
    while (const Token* t = in.peek()) {
        if (t->text != "outcome") {
            break;
        }
        in.next("outcome");
        const Token& label = in.next("outcome label");
        if (is_section_keyword(label.text)) {
            throw ParseError(label.line, "missing outcome label");
        }
        std::vector<Complex> entries;
        entries.reserve(dim * dim);
        for (std::size_t i = 0; i < dim * dim; ++i) {
            entries.push_back(parse_complex(in.next("matrix entry")));
        }
        outcomes.push_back({label.text, ComplexMatrix(dim, dim, std::move(entries))});
    }
    return Observable(dim, std::move(outcomes));
}

}  // namespace

std::string serialize_mon1qfa(const Mon1qfa& automaton) {
    for (const auto& s : automaton.alphabet().symbols()) {
        if (s.size() != 1) {
            throw InputError("automaton text format needs single-character symbols, got '" + s + "'");
        }
    }
    std::ostringstream out;
    out << "mon1qfa dim=" << automaton.dimension() << " alphabet=" << automaton.alphabet().to_string()
        << '\n';
    out << "initial:";
    for (const auto& z : automaton.initial()) {
        out << ' ' << format_complex(z);
    }
    out << '\n';
    for (std::size_t i = 0; i < automaton.alphabet().size(); ++i) {
        out << "observable " << automaton.alphabet()[i] << '\n';
        write_outcomes(out, automaton.observables()[i]);
    }
    out << "end-observable\n";
    write_outcomes(out, automaton.end_observable());
    out << "accepting:";
    for (const auto& label : automaton.accepting()) {
        out << ' ' << label;
    }
    out << '\n';
    return out.str();
}

Mon1qfa parse_mon1qfa(std::string_view text) {
    std::size_t last_line = 1;
    for (char c : text) {
        last_line += c == '\n';
    }
    TokenStream in(tokenize(text), last_line);

    in.expect("mon1qfa");
    const Token& dim_tok = in.next("dim=<m>");
    const std::size_t dim = parse_count(value_after(dim_tok, "dim="), dim_tok.line);
    if (dim == 0) {
        throw ParseError(dim_tok.line, "dimension must be positive");
    }
    const Token& alpha_tok = in.next("alphabet=<symbols>");
    Alphabet alphabet;
    try {
        alphabet = Alphabet::from_chars(value_after(alpha_tok, "alphabet="));
    } catch (const InputError& e) {
        throw ParseError(alpha_tok.line, e.what());
    }

    in.expect("initial:");
    std::vector<Complex> initial;
    for (std::size_t i = 0; i < dim; ++i) {
        initial.push_back(parse_complex(in.next("initial amplitude")));
    }

    std::vector<std::optional<Observable>> observables(alphabet.size());
    while (in.peek() && in.peek()->text == "observable") {
        in.next("observable");
        const Token& sym = in.next("observable symbol");
        const auto idx = alphabet.find(sym.text);
        if (!idx) {
            throw ParseError(sym.line, "observable for unknown symbol '" + sym.text + "'");
        }
        if (observables[*idx]) {
            throw ParseError(sym.line, "duplicate observable for symbol '" + sym.text + "'");
        }
        observables[*idx] = parse_outcomes(in, dim);
    }
    const std::size_t end_line = in.line();
    in.expect("end-observable");
    Observable end = parse_outcomes(in, dim);

    in.expect("accepting:");
    std::vector<std::string> accepting;
    while (!in.done()) {
        accepting.push_back(in.next("accepting label").text);
    }

    std::vector<Observable> ordered;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        if (!observables[i]) {
            throw ParseError(end_line, "missing observable for symbol '" + alphabet[i] + "'");
        }
        ordered.push_back(std::move(*observables[i]));
    }
    try {
        return Mon1qfa(std::move(alphabet), std::move(initial), std::move(ordered), std::move(end),
                       std::move(accepting));
    } catch (const InputError& e) {
        throw ParseError(last_line, e.what());
    }
}

}  // namespace moqa
