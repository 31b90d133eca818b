#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "socle/semigroup.hpp"

namespace socle {

/// Parsed form of one ring-description file. A file declares either a
/// polynomial-ring world (`ring Q[s,t];`, optionally with a `subalgebra`)
/// or a quotient world (`quotient R = Q[x,y1] / (x*y1);`), followed by
/// named ideals whose generators are written in the declared variables.
struct RingFile {
    struct QuotientDecl {
        std::string name;
        std::vector<std::string> variables;
        std::vector<Polynomial> defining;
    };
    struct SubalgebraDecl {
        std::string name;
        std::vector<ExponentVector> generators;
    };
    struct IdealDecl {
        std::string name;
        std::vector<Polynomial> generators;
    };

    std::optional<std::vector<std::string>> ambient;  // `ring Q[...];`
    std::optional<SubalgebraDecl> subalgebra;
    std::optional<QuotientDecl> quotient;
    std::vector<IdealDecl> ideals;

    /// Variables in which ideal generators are written.
    const std::vector<std::string>& input_variables() const {
        if (quotient) return quotient->variables;
        if (ambient) return *ambient;
        throw Error("ring file: no ring declared");
    }

    bool has_subalgebra() const { return subalgebra.has_value(); }

    MonomialSubalgebra make_subalgebra() const {
        if (!subalgebra) throw Error("ring file: no subalgebra declared");
        return MonomialSubalgebra(*ambient, subalgebra->generators, subalgebra->name);
    }

    RingPtr make_quotient_ring(MonomialOrder order = MonomialOrder::grevlex()) const {
        if (quotient) {
            std::vector<Polynomial> defining;
            for (const Polynomial& f : quotient->defining)
                defining.push_back(f.with_order(order));
            return make_ring(quotient->variables, std::move(defining), order);
        }
        if (ambient) return make_polynomial_ring(*ambient, order);
        throw Error("ring file: no ring declared");
    }

    const IdealDecl* find_ideal(const std::string& name) const {
        for (const IdealDecl& decl : ideals)
            if (decl.name == name) return &decl;
        return nullptr;
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(' || ch == '[') ++depth;
        if (ch == ')' || ch == ']') --depth;
        if (ch == sep && depth == 0) {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!trim(cur).empty()) parts.push_back(trim(cur));
    return parts;
}

/// Parses "Q[v1,v2,...]" into the variable list.
inline std::vector<std::string> parse_ring_spec(const std::string& text) {
    std::string s = trim(text);
    std::size_t open = s.find('[');
    std::size_t close = s.rfind(']');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw ParseError("ring file: expected Q[vars] in '" + text + "'");
    std::string field = trim(s.substr(0, open));
    if (field != "Q")
        throw ParseError("ring file: only the field Q is supported, got '" + field + "'");
    std::vector<std::string> vars;
    for (const std::string& v : split_top_level(s.substr(open + 1, close - open - 1), ',')) {
        if (v.empty()) throw ParseError("ring file: empty variable name");
        vars.push_back(v);
    }
    if (vars.empty()) throw ParseError("ring file: a ring needs at least one variable");
    return vars;
}

inline ExponentVector parse_subalgebra_monomial(const std::string& text,
                                                const std::vector<std::string>& vars) {
    Polynomial p = parse_polynomial(text, vars);
    if (p.terms().size() != 1 || p.terms().front().coeff != 1)
        throw ParseError("ring file: subalgebra generator '" + text + "' is not a monomial");
    return p.terms().front().mono;
}

}  // namespace detail

inline RingFile parse_ring_file(const std::string& text) {
    RingFile file;
    // Strip comments (# to end of line), then split statements on ';'.
    std::string code;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::size_t hash = line.find('#');
        code += hash == std::string::npos ? line : line.substr(0, hash);
        code += '\n';
    }

    for (const std::string& raw : detail::split_top_level(code, ';')) {
        std::string stmt = detail::trim(raw);
        if (stmt.empty()) continue;
        std::istringstream words(stmt);
        std::string keyword;
        words >> keyword;

        if (keyword == "ring") {
            if (file.ambient || file.quotient)
                throw ParseError("ring file: multiple ring declarations");
            std::string rest = detail::trim(stmt.substr(4));
            file.ambient = detail::parse_ring_spec(rest);
        } else if (keyword == "subalgebra") {
            if (!file.ambient)
                throw ParseError("ring file: subalgebra requires a preceding ring declaration");
            if (file.subalgebra) throw ParseError("ring file: multiple subalgebra declarations");
            std::size_t eq = stmt.find('=');
            if (eq == std::string::npos) throw ParseError("ring file: subalgebra needs '='");
            std::string name;
            std::istringstream head(stmt.substr(10, eq - 10));
            head >> name;
            if (name.empty()) throw ParseError("ring file: subalgebra needs a name");
            RingFile::SubalgebraDecl decl{name, {}};
            for (const std::string& m : detail::split_top_level(stmt.substr(eq + 1), ','))
                decl.generators.push_back(detail::parse_subalgebra_monomial(m, *file.ambient));
            file.subalgebra = std::move(decl);
        } else if (keyword == "quotient") {
            if (file.ambient || file.quotient)
                throw ParseError("ring file: multiple ring declarations");
            std::size_t eq = stmt.find('=');
            if (eq == std::string::npos) throw ParseError("ring file: quotient needs '='");
            std::string name;
            std::istringstream head(stmt.substr(8, eq - 8));
            head >> name;
            if (name.empty()) throw ParseError("ring file: quotient needs a name");
            std::string rest = detail::trim(stmt.substr(eq + 1));
            std::size_t slash = rest.find('/');
            if (slash == std::string::npos)
                throw ParseError("ring file: quotient needs 'Q[vars] / (gens)'");
            RingFile::QuotientDecl decl;
            decl.name = name;
            decl.variables = detail::parse_ring_spec(rest.substr(0, slash));
            std::string gens = detail::trim(rest.substr(slash + 1));
            if (gens.size() < 2 || gens.front() != '(' || gens.back() != ')')
                throw ParseError("ring file: quotient generators must be parenthesized");
            for (const std::string& g :
                 detail::split_top_level(gens.substr(1, gens.size() - 2), ',')) {
                Polynomial f = parse_polynomial(g, decl.variables);
                if (!f.is_zero()) decl.defining.push_back(std::move(f));
            }
            file.quotient = std::move(decl);
        } else if (keyword == "ideal") {
            std::size_t eq = stmt.find('=');
            if (eq == std::string::npos) throw ParseError("ring file: ideal needs '='");
            std::string name;
            std::istringstream head(stmt.substr(5, eq - 5));
            head >> name;
            if (name.empty()) throw ParseError("ring file: ideal needs a name");
            if (file.find_ideal(name))
                throw ParseError("ring file: duplicate ideal '" + name + "'");
            RingFile::IdealDecl decl{name, {}};
            for (const std::string& g : detail::split_top_level(stmt.substr(eq + 1), ','))
                decl.generators.push_back(parse_polynomial(g, file.input_variables()));
            file.ideals.push_back(std::move(decl));
        } else {
            throw ParseError("ring file: unknown statement '" + keyword + "'");
        }
    }
    if (!file.ambient && !file.quotient) throw ParseError("ring file: no ring declared");
    return file;
}

inline std::string print_ring_file(const RingFile& file) {
    std::string out;
    auto join_vars = [](const std::vector<std::string>& vars) {
        std::string s;
        for (const std::string& v : vars) s += (s.empty() ? "" : ",") + v;
        return s;
    };
    if (file.ambient) out += "ring Q[" + join_vars(*file.ambient) + "];\n";
    if (file.subalgebra) {
        out += "subalgebra " + file.subalgebra->name + " = ";
        bool first = true;
        for (const ExponentVector& g : file.subalgebra->generators) {
            if (!first) out += ", ";
            out += monomial_to_string(g, *file.ambient);
            first = false;
        }
        out += ";\n";
    }
    if (file.quotient) {
        out += "quotient " + file.quotient->name + " = Q[" + join_vars(file.quotient->variables) +
               "] / (";
        if (file.quotient->defining.empty()) {
            out += "0";
        } else {
            bool first = true;
            for (const Polynomial& f : file.quotient->defining) {
                if (!first) out += ", ";
                out += to_string(f, file.quotient->variables);
                first = false;
            }
        }
        out += ");\n";
    }
    for (const RingFile::IdealDecl& decl : file.ideals) {
        out += "ideal " + decl.name + " = ";
        bool first = true;
        for (const Polynomial& g : decl.generators) {
            if (!first) out += ", ";
            out += to_string(g, file.input_variables());
            first = false;
        }
        out += ";\n";
    }
    return out;
}

inline RingFile load_ring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("ring file: cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_ring_file(buffer.str());
}

}  // namespace socle
