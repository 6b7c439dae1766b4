#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "normalcut/error.hpp"
#include "normalcut/wirtinger.hpp"

namespace normalcut {

namespace {

int successor(int label, int count) { return label % count + 1; }

}  // namespace

KnotDiagram parse_pd(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("planar diagram is not valid JSON: ") + e.what());
  }

  if (j.is_string()) {
    if (j.get<std::string>() != "unknot")
      throw parse_error("unrecognized diagram token: " + j.get<std::string>());
    KnotDiagram d;
    d.arc_count = 1;
    return d;
  }
  if (!j.is_array() || j.empty())
    throw parse_error("planar diagram must be a non-empty array of crossings");

  KnotDiagram d;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 4)
      throw parse_error("each crossing must be an array of four edge labels");
    std::array<int, 4> x{};
    for (int i = 0; i < 4; ++i) {
      if (!e[i].is_number_integer())
        throw parse_error("edge labels must be integers");
      x[i] = e[i].get<int>();
    }
    d.crossings.push_back(x);
  }
  const int c = d.crossing_count();
  d.arc_count = 2 * c;

  std::vector<int> seen(d.arc_count + 1, 0);
  for (const auto& x : d.crossings)
    for (int label : x) {
      if (label < 1 || label > d.arc_count)
        throw parse_error("edge label " + std::to_string(label) +
                          " outside 1.." + std::to_string(d.arc_count));
      ++seen[label];
    }
  for (int label = 1; label <= d.arc_count; ++label)
    if (seen[label] != 2)
      throw parse_error("edge label " + std::to_string(label) +
                        " must appear exactly twice");

  for (const auto& x : d.crossings) {
    if (successor(x[0], d.arc_count) != x[2])
      throw parse_error("under-strand does not continue at crossing [" +
                        std::to_string(x[0]) + "," + std::to_string(x[1]) + "," +
                        std::to_string(x[2]) + "," + std::to_string(x[3]) + "]");
    if (successor(x[1], d.arc_count) != x[3] && successor(x[3], d.arc_count) != x[1])
      throw parse_error("over-strand labels not adjacent at crossing [" +
                        std::to_string(x[0]) + "," + std::to_string(x[1]) + "," +
                        std::to_string(x[2]) + "," + std::to_string(x[3]) + "]");
  }
  return d;
}

WirtingerPresentation wirtinger_presentation(const KnotDiagram& diagram) {
  WirtingerPresentation pres;
  if (diagram.crossing_count() == 0) {  // unknot token: <g | >
    pres.generator_count = 1;
    pres.arc_labels = {1};
    return pres;
  }

  // Merge edge labels along over-strands; the classes are the arcs.
  const int labels = diagram.arc_count;
  std::vector<int> parent(labels + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& x : diagram.crossings) parent[find(x[1])] = find(x[3]);

  std::vector<int> gen_of(labels + 1, -1);
  for (int label = 1; label <= labels; ++label) {
    const int root = find(label);
    if (gen_of[root] < 0) {
      gen_of[root] = pres.generator_count++;
      pres.arc_labels.push_back(label);  // smallest label reaches its root first
    }
    gen_of[label] = gen_of[root];
  }

  for (const auto& x : diagram.crossings) {
    WirtingerRelation rel;
    rel.in = gen_of[x[0]];
    rel.out = gen_of[x[2]];
    rel.over = gen_of[x[1]];
    rel.sign = successor(x[1], labels) == x[3] ? 1 : -1;
    pres.relations.push_back(rel);
  }

  // Self-check: the abelianization must be Z (out = in collapses every
  // generator into one class for a knot).
  std::vector<int> gp(pres.generator_count);
  std::iota(gp.begin(), gp.end(), 0);
  auto gfind = [&](int a) {
    while (gp[a] != a) a = gp[a] = gp[gp[a]];
    return a;
  };
  for (const auto& rel : pres.relations) gp[gfind(rel.out)] = gfind(rel.in);
  int classes = 0;
  for (int g = 0; g < pres.generator_count; ++g)
    if (gfind(g) == g) ++classes;
  if (classes != 1)
    throw parse_error("diagram is not a knot: abelianized group has rank " +
                      std::to_string(classes));
  return pres;
}

std::string cycle_notation(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  std::string out;
  std::vector<char> done(n, 0);
  for (int i = 0; i < n; ++i) {
    if (done[i] || p[i] == i) continue;
    out += '(';
    for (int j = i; !done[j]; j = p[j]) {
      done[j] = 1;
      if (j != i) out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

namespace {

Permutation compose(const Permutation& p, const Permutation& q) {  // p after q
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

Permutation conjugate(const Permutation& w, const Permutation& g) {  // w g w^-1
  return compose(compose(w, g), inverse(w));
}

std::vector<int> cycle_type(const Permutation& p) {  // parts descending
  std::vector<int> parts;
  std::vector<char> done(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i]) continue;
    int len = 0;
    for (std::size_t j = i; !done[j]; j = p[j]) {
      done[j] = 1;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

// Partitions of n with parts descending, in descending lexicographic order:
// [n], [n-1,1], ..., [1,...,1].
void partitions_of(int n, int max_part, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_of(n - part, part, cur, out);
    cur.pop_back();
  }
}

struct RepSearch {
  const WirtingerPresentation& pres;
  int n;
  std::vector<Permutation> class_elements;  // lex order within one class
  std::vector<std::optional<Permutation>> images;

  explicit RepSearch(const WirtingerPresentation& p, int size)
      : pres(p), n(size), images(p.generator_count) {}

  // Forced assignments from relations whose over-generator is known.
  // Returns false on contradiction; records touched generators for undo.
  bool propagate(std::vector<int>& touched) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& rel : pres.relations) {
        if (!images[rel.over]) continue;
        const Permutation w =
            rel.sign > 0 ? *images[rel.over] : inverse(*images[rel.over]);
        if (images[rel.in]) {
          Permutation forced = conjugate(w, *images[rel.in]);
          if (!images[rel.out]) {
            images[rel.out] = std::move(forced);
            touched.push_back(rel.out);
            changed = true;
          } else if (*images[rel.out] != forced) {
            return false;
          }
        } else if (images[rel.out]) {
          Permutation forced = conjugate(inverse(w), *images[rel.out]);
          images[rel.in] = std::move(forced);
          touched.push_back(rel.in);
          changed = true;
        }
      }
    }
    return true;
  }

  bool assign() {
    int next = -1;
    for (int g = 0; g < pres.generator_count; ++g)
      if (!images[g]) {
        next = g;
        break;
      }
    if (next < 0) return finish();
    for (const Permutation& candidate : class_elements) {
      std::vector<int> touched;
      images[next] = candidate;
      touched.push_back(next);
      if (propagate(touched) && assign()) return true;
      for (int g : touched) images[g].reset();
    }
    return false;
  }

  bool finish() {
    for (const auto& rel : pres.relations) {
      const Permutation w =
          rel.sign > 0 ? *images[rel.over] : inverse(*images[rel.over]);
      if (conjugate(w, *images[rel.in]) != *images[rel.out]) return false;
    }
    return !image_is_cyclic();
  }

  std::int64_t image_order = 0;

  bool image_is_cyclic() {
    Permutation id(n);
    std::iota(id.begin(), id.end(), 0);
    std::set<Permutation> group{id};
    std::vector<Permutation> frontier{id};
    while (!frontier.empty()) {
      std::vector<Permutation> next_frontier;
      for (const Permutation& g : frontier)
        for (const auto& img : images) {
          Permutation h = compose(g, *img);
          if (group.insert(h).second) next_frontier.push_back(std::move(h));
        }
      frontier = std::move(next_frontier);
    }
    image_order = static_cast<std::int64_t>(group.size());
    for (const Permutation& g : group) {
      std::int64_t ord = 1;
      Permutation h = g;
      while (h != id) {
        h = compose(h, g);
        ++ord;
      }
      if (ord == image_order) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<PermutationAssignment> find_noncyclic_rep(
    const WirtingerPresentation& pres, int n_max) {
  if (n_max < 3) throw std::invalid_argument("n_max must be at least 3");

  for (int n = 3; n <= n_max; ++n) {
    // All of S_n in lex order, bucketed by cycle type.
    std::map<std::vector<int>, std::vector<Permutation>> by_type;
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      by_type[cycle_type(p)].push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions_of(n, n, cur, parts);

    for (const auto& partition : parts) {
      if (partition[0] == 1) continue;  // identity class: image is trivial
      RepSearch search(pres, n);
      search.class_elements = by_type.at(partition);
      if (search.assign()) {
        PermutationAssignment res;
        res.n = n;
        res.images.reserve(pres.generator_count);
        for (const auto& img : search.images) res.images.push_back(*img);
        res.image_order = search.image_order;
        return res;
      }
    }
  }
  return std::nullopt;
}

}  // namespace normalcut
