#pragma once

// Planar binary trees with their balanced-parenthesis encoding, the Tamari
// order generated by right rotations (A^B)^C -> A^(B^C), and the 0/1 order
// matrix over a canonical linear extension.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

#include "tamcox/arith.hpp"
#include "tamcox/errors.hpp"
#include "tamcox/matrix.hpp"

namespace tamcox {

// Default caps: catalan(12) = 208012 trees, 4862 lattice elements.
inline constexpr long kMaxTreeInternalNodes = 12;
inline constexpr long kDefaultMaxLatticeElements = 4862;

// Immutable planar binary tree; a default-constructed Tree is the leaf.
// Subtrees are shared, so copies are cheap.
class Tree {
 public:
  Tree() = default;

  static Tree leaf() { return Tree(); }

  static Tree node(const Tree& left, const Tree& right) {
    Tree t;
    t.n_ = std::make_shared<const Node>(
        Node{left.n_, right.n_, left.internal_nodes() + right.internal_nodes() + 1});
    return t;
  }

  bool is_leaf() const { return n_ == nullptr; }

  long internal_nodes() const { return n_ ? n_->internal : 0; }
  long leaves() const { return internal_nodes() + 1; }

  Tree left() const {
    require_internal();
    return Tree(n_->left);
  }

  Tree right() const {
    require_internal();
    return Tree(n_->right);
  }

  // encode(leaf) = "", encode(l^r) = "(" encode(l) ")" encode(r);
  // a tree with m internal nodes encodes as a balanced word of length 2m.
  std::string encode() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(2 * internal_nodes()));
    append_encoding(n_, out);
    return out;
  }

  static Tree decode(std::string_view word) {
    std::size_t pos = 0;
    Tree t = parse(word, pos);
    if (pos != word.size()) throw Error("Tree::decode: trailing characters");
    return t;
  }

  friend bool operator==(const Tree& a, const Tree& b) { return equal(a.n_, b.n_); }
  friend bool operator!=(const Tree& a, const Tree& b) { return !(a == b); }

 private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  struct Node {
    NodePtr left;
    NodePtr right;
    long internal;
  };

  explicit Tree(NodePtr n) : n_(std::move(n)) {}

  void require_internal() const {
    if (!n_) throw Error("Tree: leaf has no children");
  }

  static void append_encoding(const NodePtr& n, std::string& out) {
    if (!n) return;
    out.push_back('(');
    append_encoding(n->left, out);
    out.push_back(')');
    append_encoding(n->right, out);
  }

  static Tree parse(std::string_view w, std::size_t& pos) {
    if (pos == w.size() || w[pos] == ')') return leaf();
    if (w[pos] != '(') throw Error("Tree::decode: malformed word");
    ++pos;
    Tree l = parse(w, pos);
    if (pos == w.size() || w[pos] != ')') throw Error("Tree::decode: unbalanced word");
    ++pos;
    Tree r = parse(w, pos);
    return node(l, r);
  }

  static bool equal(const NodePtr& a, const NodePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->internal != b->internal) return false;
    return equal(a->left, b->left) && equal(a->right, b->right);
  }

  NodePtr n_;
};

// All planar binary trees with m internal nodes, in the deterministic order
// given by recursing on the left-subtree size.
inline std::vector<Tree> enumerate_trees(long m, long cap = kMaxTreeInternalNodes) {
  if (m < 0) throw Error("enumerate_trees: negative size");
  if (m > cap) throw SizeLimit("enumerate_trees: " + std::to_string(m) +
                               " internal nodes exceeds cap " + std::to_string(cap));
  std::vector<std::vector<Tree>> table(static_cast<std::size_t>(m) + 1);
  table[0] = {Tree::leaf()};
  for (long s = 1; s <= m; ++s) {
    auto& out = table[static_cast<std::size_t>(s)];
    for (long i = 0; i < s; ++i) {
      for (const Tree& l : table[static_cast<std::size_t>(i)]) {
        for (const Tree& r : table[static_cast<std::size_t>(s - 1 - i)]) {
          out.push_back(Tree::node(l, r));
        }
      }
    }
  }
  return table[static_cast<std::size_t>(m)];
}

// Trees covering t in the Tamari order: one right rotation
// (A^B)^C -> A^(B^C) at each internal node whose left child is internal.
inline std::vector<Tree> tamari_covers(const Tree& t) {
  std::vector<Tree> out;
  if (t.is_leaf()) return out;
  const Tree l = t.left();
  const Tree r = t.right();
  if (!l.is_leaf()) {
    out.push_back(Tree::node(l.left(), Tree::node(l.right(), r)));
  }
  for (const Tree& c : tamari_covers(l)) out.push_back(Tree::node(c, r));
  for (const Tree& c : tamari_covers(r)) out.push_back(Tree::node(l, c));
  return out;
}

// The Tamari order on trees with n leaves, over a canonical rank order
// (a topological sort of the cover DAG, ties broken by encoding).
class TamariLattice {
 public:
  static TamariLattice build(long n_leaves, long max_elements = kDefaultMaxLatticeElements) {
    if (n_leaves < 2) throw Error("TamariLattice: need at least 2 leaves");
    const Int count = catalan(n_leaves - 1);
    if (count > max_elements) {
      throw SizeLimit("TamariLattice: " + count.get_str() + " elements exceeds cap " +
                      std::to_string(max_elements));
    }

    TamariLattice lat;
    lat.n_leaves_ = n_leaves;
    std::vector<Tree> raw = enumerate_trees(n_leaves - 1);
    const long n = static_cast<long>(raw.size());

    std::vector<std::string> words(raw.size());
    std::map<std::string, long> index_of;
    for (long i = 0; i < n; ++i) {
      words[static_cast<std::size_t>(i)] = raw[static_cast<std::size_t>(i)].encode();
      index_of.emplace(words[static_cast<std::size_t>(i)], i);
    }

    std::vector<std::vector<long>> up(raw.size());
    std::vector<long> indeg(raw.size(), 0);
    for (long i = 0; i < n; ++i) {
      for (const Tree& c : tamari_covers(raw[static_cast<std::size_t>(i)])) {
        const long j = index_of.at(c.encode());
        up[static_cast<std::size_t>(i)].push_back(j);
        ++indeg[static_cast<std::size_t>(j)];
      }
    }

    // Kahn topological sort; the min-heap on encodings makes ranks canonical.
    using Entry = std::pair<std::string, long>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
    for (long i = 0; i < n; ++i) {
      if (indeg[static_cast<std::size_t>(i)] == 0)
        ready.emplace(words[static_cast<std::size_t>(i)], i);
    }
    std::vector<long> rank_of(raw.size(), -1);
    long next_rank = 0;
    while (!ready.empty()) {
      const long i = ready.top().second;
      ready.pop();
      rank_of[static_cast<std::size_t>(i)] = next_rank++;
      for (long j : up[static_cast<std::size_t>(i)]) {
        if (--indeg[static_cast<std::size_t>(j)] == 0)
          ready.emplace(words[static_cast<std::size_t>(j)], j);
      }
    }
    if (next_rank != n) throw Error("TamariLattice: cover relation is cyclic");

    lat.elements_.resize(raw.size());
    lat.covers_.resize(raw.size());
    for (long i = 0; i < n; ++i) {
      const long r = rank_of[static_cast<std::size_t>(i)];
      lat.elements_[static_cast<std::size_t>(r)] = raw[static_cast<std::size_t>(i)];
      auto& row = lat.covers_[static_cast<std::size_t>(r)];
      for (long j : up[static_cast<std::size_t>(i)]) {
        row.push_back(rank_of[static_cast<std::size_t>(j)]);
      }
      std::sort(row.begin(), row.end());
    }

    // Reflexive-transitive closure over the cover DAG, highest rank first.
    lat.words_ = (n + 63) / 64;
    lat.leq_.assign(raw.size() * static_cast<std::size_t>(lat.words_), 0);
    for (long x = n - 1; x >= 0; --x) {
      std::uint64_t* row = lat.row(x);
      row[x / 64] |= std::uint64_t{1} << (x % 64);
      for (long y : lat.covers_[static_cast<std::size_t>(x)]) {
        const std::uint64_t* src = lat.row(y);
        for (long w = 0; w < lat.words_; ++w) row[w] |= src[w];
      }
    }
    return lat;
  }

  long n_leaves() const { return n_leaves_; }
  long size() const { return static_cast<long>(elements_.size()); }
  const std::vector<Tree>& elements() const { return elements_; }
  const std::vector<std::vector<long>>& covers() const { return covers_; }

  bool leq(long x, long y) const {
    return (row(x)[y / 64] >> (y % 64)) & 1U;
  }

 private:
  std::uint64_t* row(long x) { return leq_.data() + static_cast<std::size_t>(x) * words_; }
  const std::uint64_t* row(long x) const {
    return leq_.data() + static_cast<std::size_t>(x) * words_;
  }

  long n_leaves_ = 0;
  long words_ = 0;
  std::vector<Tree> elements_;
  std::vector<std::vector<long>> covers_;
  std::vector<std::uint64_t> leq_;
};

// C[x][y] = 1 iff x <= y; unit upper triangular in the canonical rank order
// because ranks form a linear extension.
inline MatZ order_matrix(const TamariLattice& lat) {
  const long n = lat.size();
  MatZ c(n, n);
  for (long x = 0; x < n; ++x) {
    for (long y = 0; y < n; ++y) {
      if (lat.leq(x, y)) c.at(x, y) = 1;
    }
  }
  return c;
}

}  // namespace tamcox
