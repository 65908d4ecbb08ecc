#include "mindef/afp.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "mindef/errors.hpp"

namespace mindef {

namespace {

enum class Predicate { Arg, Att, Focus, Restricted };

struct Statement {
    std::size_t line;
    Predicate predicate;
    std::string first;
    std::string second;
};

bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class LineParser {
public:
    LineParser(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    Statement statement() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::string_view word = text_.substr(start, pos_ - start);

        Statement st{line_, Predicate::Arg, {}, {}};
        std::size_t arity = 1;
        if (word == "arg") {
            st.predicate = Predicate::Arg;
        } else if (word == "att") {
            st.predicate = Predicate::Att;
            arity = 2;
        } else if (word == "focus") {
            st.predicate = Predicate::Focus;
        } else if (word == "restricted") {
            st.predicate = Predicate::Restricted;
        } else if (word.empty()) {
            fail("expected a statement");
        } else {
            fail("unknown statement '" + std::string(word) + "'");
        }

        expect('(');
        st.first = name();
        if (arity == 2) {
            expect(',');
            st.second = name();
        }
        expect(')');
        expect('.');
        skip_space();
        if (pos_ != text_.size()) fail("trailing characters after statement");
        return st;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string name() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
        if (pos_ == start) fail("expected an argument name");
        return std::string(text_.substr(start, pos_ - start));
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what); }

    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

}  // namespace

PartitionedFramework parse_afp(std::string_view text) {
    std::vector<Statement> statements;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r\f\v") == std::string_view::npos) continue;
        statements.push_back(LineParser(line, line_no).statement());
    }

    std::vector<std::string> names;
    for (const auto& st : statements) {
        if (st.predicate == Predicate::Arg) names.push_back(st.first);
    }
    ArgumentationFramework declared = build_framework(names, {});
    auto require = [&](const std::string& name, std::size_t line) {
        if (!declared.find(name)) throw UndeclaredArgument(name, line);
    };

    std::vector<std::pair<std::string, std::string>> attacks;
    std::vector<std::string> focus;
    std::vector<std::string> restricted;
    for (const auto& st : statements) {
        switch (st.predicate) {
            case Predicate::Arg:
                break;
            case Predicate::Att:
                require(st.first, st.line);
                require(st.second, st.line);
                attacks.emplace_back(st.first, st.second);
                break;
            case Predicate::Focus:
                require(st.first, st.line);
                focus.push_back(st.first);
                break;
            case Predicate::Restricted:
                require(st.first, st.line);
                restricted.push_back(st.first);
                break;
        }
    }

    ArgumentationFramework af = build_framework(names, attacks);
    Partition p = focus.empty() && restricted.empty() ? Partition::vacuous(af)
                                                      : build_partition(af, focus, restricted);
    return PartitionedFramework{std::move(af), std::move(p)};
}

Partition canonical_partition(const ArgumentationFramework& af, const Partition& p) {
    if (p.focus().empty()) return Partition::vacuous(af);
    return p;
}

std::string serialize_afp(const ArgumentationFramework& af, const Partition& p) {
    std::ostringstream out;
    out << "# AFP argumentation framework: " << af.size() << " arguments, " << af.attack_count()
        << " attacks\n";
    for (const auto& n : af.names()) out << "arg(" << n << ").\n";
    for (auto [from, to] : af.attacks()) out << "att(" << af.name(from) << "," << af.name(to) << ").\n";

    const Partition canon = canonical_partition(af, p);
    if (canon == Partition::vacuous(af)) return out.str();
    for (auto a : canon.unrestricted()) out << "focus(" << af.name(a) << ").\n";
    for (auto a : canon.restricted()) out << "restricted(" << af.name(a) << ").\n";
    return out.str();
}

}  // namespace mindef
