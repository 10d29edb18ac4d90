#include "weylcryst/genus.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace weylcryst::lattices {

namespace {

using crystgrp::FiniteQuotient;

// Subgroup generated by `seeds`: BFS over right multiplication. In a finite
// group closure under products alone already contains inverses.
std::vector<std::uint64_t> subgroup_closure(const FiniteQuotient& q,
                                            const std::vector<std::uint64_t>& seeds,
                                            std::unordered_set<std::uint64_t>& members) {
  members.clear();
  members.insert(q.identity());
  std::vector<std::uint64_t> found{q.identity()};
  for (size_t i = 0; i < found.size(); ++i)
    for (std::uint64_t s : seeds) {
      std::uint64_t p = q.multiply(found[i], s);
      if (members.insert(p).second) found.push_back(p);
    }
  return found;
}

// Derived subgroup as the normal closure of the generator commutators:
// generate, then demand stability under conjugation by the quotient
// generators, feeding missing conjugates back in until nothing grows.
std::vector<std::uint64_t> derived_subgroup(const FiniteQuotient& q,
                                            std::unordered_set<std::uint64_t>& members) {
  std::vector<std::uint64_t> gens = q.generators();
  std::vector<std::uint64_t> seeds;
  std::unordered_set<std::uint64_t> seeded;
  auto add_seed = [&](std::uint64_t x) {
    if (seeded.insert(x).second) seeds.push_back(x);
  };
  for (std::uint64_t a : gens)
    for (std::uint64_t b : gens)
      add_seed(q.multiply(q.multiply(q.inverse(a), q.inverse(b)), q.multiply(a, b)));
  for (;;) {
    std::vector<std::uint64_t> elems = subgroup_closure(q, seeds, members);
    bool grew = false;
    for (std::uint64_t h : elems)
      for (std::uint64_t g : gens) {
        std::uint64_t c = q.multiply(q.multiply(g, h), q.inverse(g));
        if (!members.count(c)) {
          add_seed(c);
          grew = true;
        }
      }
    if (!grew) return elems;
  }
}

// Multiset of parts of the partition whose conjugate is read off the chain
// #{x in A : x^{p^k} = e} = p^{s_k}: s_k - s_{k-1} counts parts >= k.
std::vector<int> p_part_type(const std::vector<long>& coset_orders, long p) {
  std::vector<int> conj;  // conj[k-1] = number of parts >= k
  long prev = 0;
  for (long pk = p;; pk *= p) {
    long cnt = 0;
    for (long o : coset_orders)
      if (pk % o == 0) ++cnt;
    long s = 0;
    for (long t = cnt; t > 1; t /= p) ++s;
    if (s == prev) break;
    conj.push_back(int(s - prev));
    prev = s;
  }
  std::vector<int> parts;
  for (int i = 0; !conj.empty(); ++i) {
    int len = 0;
    for (int c : conj)
      if (c > i) ++len;
    if (len == 0) break;
    parts.push_back(len);
  }
  // parts of the conjugate partition, largest first
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return parts;
}

}  // namespace

GenusFingerprint genus_fingerprint(const crystgrp::CrystGroup& w, long m, const Int& ceiling) {
  FiniteQuotient q = crystgrp::finite_quotient(w, m, ceiling);
  GenusFingerprint f;
  f.modulus = m;
  f.order = Int(static_cast<unsigned long>(q.size()));

  std::map<long, std::uint64_t> hist;
  for (std::uint64_t a = 0; a < q.size(); ++a) ++hist[q.element_order(a)];
  f.order_histogram.assign(hist.begin(), hist.end());

  std::vector<std::uint64_t> gens = q.generators();
  std::uint64_t central = 0;
  for (std::uint64_t z = 0; z < q.size(); ++z) {
    bool ok = true;
    for (std::uint64_t g : gens)
      if (q.multiply(z, g) != q.multiply(g, z)) {
        ok = false;
        break;
      }
    if (ok) ++central;
  }
  f.center_order = Int(static_cast<unsigned long>(central));

  std::unordered_set<std::uint64_t> derived;
  std::vector<std::uint64_t> derived_elems = derived_subgroup(q, derived);
  f.derived_order = Int(static_cast<unsigned long>(derived_elems.size()));

  // Abelianization: cosets of the derived subgroup, then the isomorphism type
  // from the order statistics (which determine a finite abelian group).
  std::vector<std::uint64_t> reps{q.identity()};
  auto coset_of = [&](std::uint64_t x) -> int {
    for (size_t j = 0; j < reps.size(); ++j)
      if (derived.count(q.multiply(q.inverse(reps[j]), x))) return int(j);
    return -1;
  };
  for (size_t i = 0; i < reps.size(); ++i)
    for (std::uint64_t g : gens) {
      std::uint64_t p = q.multiply(reps[i], g);
      if (coset_of(p) < 0) reps.push_back(p);
    }
  std::vector<long> coset_orders;
  for (std::uint64_t r : reps) {
    long t = 1;
    std::uint64_t p = r;
    while (!derived.count(p)) {
      p = q.multiply(p, r);
      ++t;
    }
    coset_orders.push_back(t);
  }
  long q_ab = long(reps.size());
  std::vector<std::vector<Int>> prime_powers;  // per prime, invariant p-powers largest first
  for (long p = 2; p <= q_ab; ++p) {
    if (q_ab % p != 0) continue;
    while (q_ab % p == 0) q_ab /= p;
    std::vector<int> parts = p_part_type(coset_orders, p);
    std::vector<Int> powers;
    for (int e : parts) {
      Int pw = 1;
      for (int k = 0; k < e; ++k) pw *= p;
      powers.push_back(pw);
    }
    prime_powers.push_back(std::move(powers));
  }
  size_t rmax = 0;
  for (const auto& v : prime_powers) rmax = std::max(rmax, v.size());
  std::vector<Int> invariants(rmax, Int(1));
  for (const auto& v : prime_powers)
    for (size_t j = 0; j < v.size(); ++j) invariants[j] *= v[j];
  std::reverse(invariants.begin(), invariants.end());  // smallest first, d1 | d2 | ...
  f.abelian_invariants = std::move(invariants);
  return f;
}

namespace {

// Deterministic generating sequence: repeatedly adjoin the smallest-id element
// of maximal order outside the current closure. Keeps the backtracking depth
// small without any conjugacy machinery.
std::vector<std::uint64_t> greedy_generators(const FiniteQuotient& q,
                                             const std::vector<long>& ord) {
  std::vector<std::uint64_t> gseq;
  std::unordered_set<std::uint64_t> cl;
  std::vector<std::uint64_t> elems = subgroup_closure(q, {}, cl);
  while (cl.size() < q.size()) {
    long best = 0;
    std::uint64_t pick = 0;
    for (std::uint64_t x = 0; x < q.size(); ++x)
      if (!cl.count(x) && ord[size_t(x)] > best) {
        best = ord[size_t(x)];
        pick = x;
      }
    gseq.push_back(pick);
    elems = subgroup_closure(q, gseq, cl);
  }
  return gseq;
}

struct IsoSearch {
  const FiniteQuotient& a;
  const FiniteQuotient& b;
  const std::vector<std::uint64_t>& gseq;
  const std::vector<long>& ord_a;
  const std::vector<long>& ord_b;
  std::vector<std::uint64_t> images;
  long budget = 50000000;

  // Rebuilds the partial map <g_1..g_d> -> B and checks it is a well-defined
  // injective homomorphism.
  bool consistent(size_t d, size_t* mapped) {
    std::unordered_map<std::uint64_t, std::uint64_t> img{{a.identity(), b.identity()}};
    std::unordered_set<std::uint64_t> used{b.identity()};
    std::vector<std::uint64_t> order{a.identity()};
    for (size_t i = 0; i < d; ++i) {
      auto it = img.find(gseq[i]);
      if (it == img.end()) {
        if (!used.insert(images[i]).second) return false;
        img.emplace(gseq[i], images[i]);
        order.push_back(gseq[i]);
      } else if (it->second != images[i]) {
        return false;
      }
    }
    for (size_t i = 0; i < order.size(); ++i)
      for (size_t j = 0; j < d; ++j) {
        if (--budget < 0) throw BoundTooLarge("quotients_isomorphic: search budget exhausted");
        std::uint64_t x = a.multiply(order[i], gseq[j]);
        std::uint64_t y = b.multiply(img.at(order[i]), images[j]);
        auto it = img.find(x);
        if (it == img.end()) {
          if (!used.insert(y).second) return false;
          img.emplace(x, y);
          order.push_back(x);
        } else if (it->second != y) {
          return false;
        }
      }
    *mapped = order.size();
    return true;
  }

  bool dfs(size_t d) {
    if (d == gseq.size()) {
      size_t mapped = 0;
      return consistent(d, &mapped) && mapped == a.size();
    }
    for (std::uint64_t h = 0; h < b.size(); ++h) {
      if (ord_b[size_t(h)] != ord_a[size_t(gseq[d])]) continue;
      images[d] = h;
      size_t mapped = 0;
      if (consistent(d + 1, &mapped) && dfs(d + 1)) return true;
    }
    return false;
  }
};

}  // namespace

bool quotients_isomorphic(const FiniteQuotient& a, const FiniteQuotient& b,
                          std::uint64_t iso_limit) {
  if (a.size() != b.size()) return false;
  if (a.size() > iso_limit)
    throw BoundTooLarge("quotients_isomorphic: order exceeds the exhaustive-search limit");
  std::vector<long> ord_a(a.size()), ord_b(b.size());
  for (std::uint64_t x = 0; x < a.size(); ++x) ord_a[size_t(x)] = a.element_order(x);
  for (std::uint64_t x = 0; x < b.size(); ++x) ord_b[size_t(x)] = b.element_order(x);
  {
    std::vector<long> ha = ord_a, hb = ord_b;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return false;
  }
  std::vector<std::uint64_t> gseq = greedy_generators(a, ord_a);
  IsoSearch search{a, b, gseq, ord_a, ord_b, std::vector<std::uint64_t>(gseq.size()), 50000000};
  return search.dfs(0);
}

GenusScan least_separating_modulus(const crystgrp::CrystGroup& a, const crystgrp::CrystGroup& b,
                                   long max_m, const Int& ceiling, std::uint64_t iso_limit) {
  for (long m = 1; m <= max_m; ++m) {
    GenusFingerprint fa = genus_fingerprint(a, m, ceiling);
    GenusFingerprint fb = genus_fingerprint(b, m, ceiling);
    if (fa.order != fb.order) return {m, "order"};
    if (fa.order_histogram != fb.order_histogram) return {m, "element-order histogram"};
    if (fa.abelian_invariants != fb.abelian_invariants) return {m, "abelian invariants"};
    if (fa.center_order != fb.center_order) return {m, "center order"};
    if (fa.derived_order != fb.derived_order) return {m, "derived-subgroup order"};
    if (fa.order <= Int(long(iso_limit))) {
      crystgrp::FiniteQuotient qa = crystgrp::finite_quotient(a, m, ceiling);
      crystgrp::FiniteQuotient qb = crystgrp::finite_quotient(b, m, ceiling);
      if (!quotients_isomorphic(qa, qb, iso_limit)) return {m, "multiplication-table backtracking"};
    }
  }
  return {std::nullopt, "fingerprints agree through the scanned moduli"};
}

}  // namespace weylcryst::lattices
