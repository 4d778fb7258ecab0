#pragma once

#include <memory>
#include <string>
#include <vector>

#include "zol/pattern_graph.hpp"

namespace zol {

// Existential-fragment AST. Negation appears only directly above atoms;
// every variable occurrence is bound by an enclosing Exists once wrapped
// into a Sentence.
enum class NodeKind { Exists, And, Or, Not, Adj, Eq };

struct Node {
    NodeKind kind;
    std::string var;             // Exists: bound name; Adj/Eq: left operand
    std::string var2;            // Adj/Eq: right operand
    std::vector<Node> children;  // Exists/Not: 1; And/Or: >= 2
    int offset = -1;             // source byte offset when parsed

    // Filled by validation: depth of the binder in the enclosing Exists chain
    // (0 = outermost). For Exists nodes, `level` is their own chain depth.
    int level = -1;              // Exists
    int slot1 = -1, slot2 = -1;  // atoms

    bool is_atom() const { return kind == NodeKind::Adj || kind == NodeKind::Eq; }
};

Node exists(std::string var, Node body);
Node conj(std::vector<Node> children);
Node disj(std::vector<Node> children);
Node neg(Node atom);
Node adj(std::string a, std::string b);
Node eq(std::string a, std::string b);

// A validated closed sentence: existential shape, all variables bound,
// binder levels resolved.
struct Sentence {
    Node root;
    int max_level = 0;           // number of nested Exists along the deepest chain
};

// Validates shape and closedness; resolves binder levels. `free_vars`, when
// nonempty, are treated as pre-bound at levels 0..m-1 (fragment evaluation).
// Throws ParseError with the node's source offset on violations.
Sentence make_sentence(Node root, const std::vector<std::string>& free_vars = {});

// Text DSL:
//   phi  ::= "E" ident ";" phi | disj
//   disj ::= conj ("|" conj)*
//   conj ::= unit ("&" unit)*
//   unit ::= "!" atom | atom | "(" phi ")" | "E" ident ";" phi
//   atom ::= ident "~" ident | ident "=" ident
// "E x; ..." scopes as far right as possible; "&" binds tighter than "|".
Sentence parse_sentence(const std::string& text);

// Emits text the parser maps back to a structurally equal tree.
std::string print_sentence(const Node& n);
std::string print_sentence(const Sentence& s);

// Max nesting of Exists along any root-to-leaf path.
int quantifier_depth(const Sentence& s);

// Number of Exists nodes in the tree.
int variable_count(const Sentence& s);

bool structurally_equal(const Node& a, const Node& b);

} // namespace zol
