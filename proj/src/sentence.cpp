#include "zol/sentence.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace zol {

Node exists(std::string var, Node body) {
    Node n;
    n.kind = NodeKind::Exists;
    n.var = std::move(var);
    n.children.push_back(std::move(body));
    return n;
}

Node conj(std::vector<Node> children) {
    if (children.size() == 1) return std::move(children[0]);
    Node n;
    n.kind = NodeKind::And;
    n.children = std::move(children);
    return n;
}

Node disj(std::vector<Node> children) {
    if (children.size() == 1) return std::move(children[0]);
    Node n;
    n.kind = NodeKind::Or;
    n.children = std::move(children);
    return n;
}

Node neg(Node atom) {
    Node n;
    n.kind = NodeKind::Not;
    n.children.push_back(std::move(atom));
    return n;
}

Node adj(std::string a, std::string b) {
    Node n;
    n.kind = NodeKind::Adj;
    n.var = std::move(a);
    n.var2 = std::move(b);
    return n;
}

Node eq(std::string a, std::string b) {
    Node n;
    n.kind = NodeKind::Eq;
    n.var = std::move(a);
    n.var2 = std::move(b);
    return n;
}

namespace {

int resolve(const std::vector<std::string>& chain, const std::string& name) {
    for (int i = (int)chain.size() - 1; i >= 0; --i)
        if (chain[i] == name) return i;
    return -1;
}

void validate_node(Node& n, std::vector<std::string>& chain, int& max_level) {
    switch (n.kind) {
        case NodeKind::Exists: {
            if (n.children.size() != 1)
                throw ParseError("exists must have exactly one body", n.offset);
            n.level = (int)chain.size();
            chain.push_back(n.var);
            max_level = std::max(max_level, (int)chain.size());
            validate_node(n.children[0], chain, max_level);
            chain.pop_back();
            break;
        }
        case NodeKind::And:
        case NodeKind::Or: {
            if (n.children.size() < 2)
                throw ParseError("and/or needs at least two operands", n.offset);
            for (auto& c : n.children) validate_node(c, chain, max_level);
            break;
        }
        case NodeKind::Not: {
            if (n.children.size() != 1 || !n.children[0].is_atom())
                throw ParseError("negation of non-atom", n.offset);
            validate_node(n.children[0], chain, max_level);
            break;
        }
        case NodeKind::Adj:
        case NodeKind::Eq: {
            n.slot1 = resolve(chain, n.var);
            if (n.slot1 < 0)
                throw ParseError("unbound variable '" + n.var + "'", n.offset);
            n.slot2 = resolve(chain, n.var2);
            if (n.slot2 < 0)
                throw ParseError("unbound variable '" + n.var2 + "'", n.offset);
            break;
        }
    }
}

} // namespace

Sentence make_sentence(Node root, const std::vector<std::string>& free_vars) {
    Sentence s;
    s.root = std::move(root);
    std::vector<std::string> chain = free_vars;
    int max_level = (int)chain.size();
    validate_node(s.root, chain, max_level);
    s.max_level = max_level;
    return s;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool eat(char c) {
        if (peek(c)) { ++pos; return true; }
        return false;
    }

    void expect(char c, const char* what) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "' " + what, (int)pos);
    }

    static bool ident_char(char c) {
        return std::isalnum((unsigned char)c) || c == '_' || c == '\'';
    }

    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && ident_char(text[pos])) ++pos;
        if (pos == start) throw ParseError("expected identifier", (int)pos);
        return text.substr(start, pos - start);
    }

    // Is the next token the quantifier keyword "E"?
    bool at_exists() {
        skip_ws();
        if (pos >= text.size() || text[pos] != 'E') return false;
        if (pos + 1 < text.size() && ident_char(text[pos + 1])) return false;
        return true;
    }

    Node parse_phi() {
        if (at_exists()) {
            int off = (int)pos;
            ++pos;
            std::string name = ident();
            expect(';', "after quantified variable");
            Node n = exists(name, parse_phi());
            n.offset = off;
            return n;
        }
        return parse_disj();
    }

    Node parse_disj() {
        std::vector<Node> parts;
        parts.push_back(parse_conj());
        while (eat('|')) parts.push_back(parse_conj());
        return disj(std::move(parts));
    }

    Node parse_conj() {
        std::vector<Node> parts;
        parts.push_back(parse_unit());
        while (eat('&')) parts.push_back(parse_unit());
        return conj(std::move(parts));
    }

    Node parse_unit() {
        skip_ws();
        int off = (int)pos;
        if (eat('!')) {
            // Only an atom (possibly parenthesised) may follow '!'.
            Node inner = eat('(') ? paren_rest() : parse_atom();
            Node n = neg(std::move(inner));
            n.offset = off;
            if (!n.children[0].is_atom()) throw ParseError("negation of non-atom", off);
            return n;
        }
        if (eat('(')) return paren_rest();
        if (at_exists()) return parse_phi();
        return parse_atom();
    }

    Node paren_rest() {
        Node n = parse_phi();
        expect(')', "to close group");
        return n;
    }

    Node parse_atom() {
        skip_ws();
        int off = (int)pos;
        std::string a = ident();
        skip_ws();
        if (eat('~')) {
            Node n = adj(a, ident());
            n.offset = off;
            return n;
        }
        if (eat('=')) {
            Node n = eq(a, ident());
            n.offset = off;
            return n;
        }
        throw ParseError("expected '~' or '=' in atom", (int)pos);
    }
};

} // namespace

Sentence parse_sentence(const std::string& text) {
    Parser p(text);
    Node root = p.parse_phi();
    p.skip_ws();
    if (p.pos != text.size())
        throw ParseError("trailing input after sentence", (int)p.pos);
    return make_sentence(std::move(root));
}

// ---------------------------------------------------------------------------
// Printer. And children print bare unless they are Or/Exists (those get
// parens); Or children that are Exists get parens. This maps back to the
// same tree because the parser flattens '&'/'|' chains only at one level.

namespace {

void print_node(const Node& n, std::string& out) {
    switch (n.kind) {
        case NodeKind::Exists:
            out += "E " + n.var + "; ";
            print_node(n.children[0], out);
            break;
        case NodeKind::And: {
            bool first = true;
            for (const auto& c : n.children) {
                if (!first) out += " & ";
                first = false;
                bool wrap = c.kind == NodeKind::Or || c.kind == NodeKind::Exists ||
                            c.kind == NodeKind::And;
                if (wrap) out += "(";
                print_node(c, out);
                if (wrap) out += ")";
            }
            break;
        }
        case NodeKind::Or: {
            bool first = true;
            for (const auto& c : n.children) {
                if (!first) out += " | ";
                first = false;
                bool wrap = c.kind == NodeKind::Exists || c.kind == NodeKind::Or;
                if (wrap) out += "(";
                print_node(c, out);
                if (wrap) out += ")";
            }
            break;
        }
        case NodeKind::Not:
            out += "!";
            print_node(n.children[0], out);
            break;
        case NodeKind::Adj:
            out += n.var + " ~ " + n.var2;
            break;
        case NodeKind::Eq:
            out += n.var + " = " + n.var2;
            break;
    }
}

} // namespace

std::string print_sentence(const Node& n) {
    std::string out;
    print_node(n, out);
    return out;
}

std::string print_sentence(const Sentence& s) { return print_sentence(s.root); }

namespace {

int depth_of(const Node& n) {
    int d = 0;
    for (const auto& c : n.children) d = std::max(d, depth_of(c));
    return d + (n.kind == NodeKind::Exists ? 1 : 0);
}

int count_exists(const Node& n) {
    int c = n.kind == NodeKind::Exists ? 1 : 0;
    for (const auto& ch : n.children) c += count_exists(ch);
    return c;
}

} // namespace

int quantifier_depth(const Sentence& s) { return depth_of(s.root); }

int variable_count(const Sentence& s) { return count_exists(s.root); }

bool structurally_equal(const Node& a, const Node& b) {
    if (a.kind != b.kind || a.var != b.var || a.var2 != b.var2 ||
        a.children.size() != b.children.size())
        return false;
    for (size_t i = 0; i < a.children.size(); ++i)
        if (!structurally_equal(a.children[i], b.children[i])) return false;
    return true;
}

} // namespace zol
