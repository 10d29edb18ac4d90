#include "weylcryst/weyl.hpp"

#include <algorithm>
#include <numeric>

namespace weylcryst::weyl {

namespace {

std::vector<Rat> flatten(const RatMatrix& m) {
  std::vector<Rat> key;
  key.reserve(size_t(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) key.push_back(m(i, j));
  return key;
}

}  // namespace

WeylGroup WeylGroup::trivial(int dim) {
  WeylGroup w;
  w.dim_ = dim;
  w.elements_.push_back(RatMatrix::identity(dim));
  w.parent_.emplace_back(-1, -1);
  w.index_[flatten(w.elements_[0])] = 0;
  return w;
}

WeylGroup WeylGroup::generate(const std::vector<RatMatrix>& raw, long ceiling) {
  if (raw.empty()) throw GroupTooLarge("generate needs at least one generator");
  std::vector<RatMatrix> generators;
  for (const RatMatrix& g : raw) generators.push_back(exactla::canonicalized(g));
  WeylGroup w;
  w.dim_ = generators[0].rows();
  for (const RatMatrix& g : generators)
    if (g.rows() != w.dim_ || g.cols() != w.dim_)
      throw exactla::DimensionMismatch("generators must be square of equal size");
  w.gen_matrices_ = generators;

  w.elements_.push_back(RatMatrix::identity(w.dim_));
  w.parent_.emplace_back(-1, -1);
  w.index_[flatten(w.elements_[0])] = 0;

  std::vector<int> layer{0};
  while (!layer.empty()) {
    // Candidates discovered from this layer; first discovery fixes the parent.
    std::map<std::vector<Rat>, std::pair<int, int>> fresh;
    for (int e : layer)
      for (size_t g = 0; g < generators.size(); ++g) {
        RatMatrix p = w.elements_[e] * generators[g];
        std::vector<Rat> key = flatten(p);
        if (w.index_.count(key)) continue;
        fresh.emplace(std::move(key), std::make_pair(e, int(g)));
      }
    std::vector<int> next;
    next.reserve(fresh.size());
    // std::map iterates keys in lex order: canonical within-layer order.
    for (auto& [key, parent] : fresh) {
      if (long(w.elements_.size()) >= ceiling)
        throw GroupTooLarge("group exceeds the element ceiling");
      int idx = int(w.elements_.size());
      RatMatrix m(w.dim_, w.dim_);
      for (int i = 0; i < w.dim_; ++i)
        for (int j = 0; j < w.dim_; ++j) m(i, j) = key[size_t(i) * w.dim_ + j];
      w.elements_.push_back(std::move(m));
      w.parent_.push_back(parent);
      w.index_.emplace(key, idx);
      next.push_back(idx);
    }
    layer = std::move(next);
  }

  // Generator element indices and the multiplication-by-generator table.
  for (const RatMatrix& g : generators) w.gen_elements_.push_back(w.index_.at(flatten(g)));
  w.mult_gen_.assign(w.elements_.size() * generators.size(), -1);
  for (size_t e = 0; e < w.elements_.size(); ++e)
    for (size_t g = 0; g < generators.size(); ++g)
      w.mult_gen_[e * generators.size() + g] = w.index_.at(flatten(w.elements_[e] * generators[g]));
  return w;
}

int WeylGroup::find(const RatMatrix& m) const {
  auto it = index_.find(flatten(exactla::canonicalized(m)));
  return it == index_.end() ? -1 : it->second;
}

int WeylGroup::multiply(int a, int b) const {
  if (b == 0) return a;
  if (a == 0) return b;
  return index_.at(flatten(elements_[a] * elements_[b]));
}

int WeylGroup::inverse(int a) const { return index_.at(flatten(elements_[a].transpose())); }

int WeylGroup::conjugate(int w, int a) const { return multiply(multiply(w, a), inverse(w)); }

bool WeylGroup::is_involution(int a) const { return a != 0 && multiply(a, a) == 0; }

std::vector<int> WeylGroup::word(int e) const {
  std::vector<int> out;
  while (parent_[e].first != -1) {
    out.push_back(parent_[e].second);
    e = parent_[e].first;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

RatMatrix WeylGroup::evaluate_word(const std::vector<int>& w) const {
  RatMatrix m = RatMatrix::identity(dim_);
  for (int g : w) m = m * gen_matrices_[g];
  return m;
}

IntMatrix coxeter_matrix(const WeylGroup& w) {
  const int l = w.generator_count();
  IntMatrix m(l, l);
  for (int i = 0; i < l; ++i) {
    m(i, i) = 1;
    for (int j = i + 1; j < l; ++j) {
      int p = w.multiply(w.generator(i), w.generator(j));
      int order = 1;
      int acc = p;
      while (acc != 0) {
        acc = w.multiply(acc, p);
        ++order;
      }
      m(i, j) = order;
      m(j, i) = order;
    }
  }
  return m;
}

CoxeterDiagram diagram_from_coxeter(const IntMatrix& m) {
  CoxeterDiagram d;
  d.nodes = m.rows();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.cols(); ++j)
      if (m(i, j) >= 3) d.edges.emplace_back(i, j, int(m(i, j).get_si()));
  return d;
}

std::vector<std::vector<int>> diagram_automorphisms(const CoxeterDiagram& d) {
  if (d.nodes > 10) throw DiagramTooLarge("diagram automorphism search is capped at 10 nodes");
  // Dense label map, 2 for non-edges.
  std::vector<std::vector<int>> m(d.nodes, std::vector<int>(d.nodes, 2));
  for (int i = 0; i < d.nodes; ++i) m[i][i] = 1;
  for (auto [i, j, lab] : d.edges) m[i][j] = m[j][i] = lab;
  std::vector<int> perm(d.nodes);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < d.nodes && ok; ++i)
      for (int j = i + 1; j < d.nodes && ok; ++j)
        if (m[perm[i]][perm[j]] != m[i][j]) ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> classify_reflections(const WeylGroup& w) {
  std::vector<int> out;
  RatMatrix id = RatMatrix::identity(w.dimension());
  for (int e = 1; e < w.size(); ++e) {
    if (!w.is_involution(e)) continue;
    if (exactla::rank(w.matrix(e) - id) == 1) out.push_back(e);
  }
  return out;
}

bool is_essential(const WeylGroup& w) {
  const int n = w.dimension();
  RatMatrix id = RatMatrix::identity(n);
  RatMatrix stacked(0, n);
  for (int g = 0; g < w.generator_count(); ++g)
    stacked = RatMatrix::vcat(stacked, id - w.matrix(w.generator(g)));
  if (w.generator_count() == 0) return n == 0;
  return exactla::rank(stacked) == n;
}

}  // namespace weylcryst::weyl
