#ifndef GT_TEST_FIXTURES_HPP
#define GT_TEST_FIXTURES_HPP

#include <sstream>
#include <string>
#include <vector>

#include "gt/relations.hpp"
#include "gt/tableau.hpp"

namespace gtt {

using namespace gt;

// Compact tableau literals: rows top first, '|' separated, e.g. "2,0|1" or
// "3,3,a|4,2|b". Named anchors a..f carry the fixed values 1/2, 1/3, 1/5,
// 1/7, 1/11, 1/13 and accept offsets like "a+2" or "b-1".
inline Tableau T(const std::string& spec) {
  static const std::map<std::string, Rat> named = {
      {"a", Rat(1, 2)}, {"b", Rat(1, 3)}, {"c", Rat(1, 5)},
      {"d", Rat(1, 7)}, {"e", Rat(1, 11)}, {"f", Rat(1, 13)},
  };
  std::vector<std::vector<Entry>> rows_top_first;
  std::map<std::string, Rat> used;
  std::stringstream ss(spec);
  std::string row_text;
  while (std::getline(ss, row_text, '|')) {
    std::vector<Entry> row;
    std::stringstream rs(row_text);
    std::string cell;
    while (std::getline(rs, cell, ',')) {
      cell.erase(remove(cell.begin(), cell.end(), ' '), cell.end());
      if (cell.empty()) continue;
      if (std::isalpha(static_cast<unsigned char>(cell[0]))) {
        std::string id(1, cell[0]);
        Int off = 0;
        if (cell.size() > 1) off = Int(cell.substr(1));
        used[id] = named.at(id);
        row.push_back(Entry{id, off});
      } else {
        row.push_back(Entry{"0", Int(cell)});
      }
    }
    rows_top_first.push_back(row);
  }
  const int n = static_cast<int>(rows_top_first.size());
  std::vector<std::vector<Entry>> rows(n);
  for (int i = 0; i < n; ++i) rows[n - 1 - i] = rows_top_first[i];
  return Tableau::make(n, rows, make_anchor_table(used));
}

// Compact relation sets: "(3,2)>=(2,2);(2,1)>(3,1)".
inline RelationSet rels(int n, const std::string& spec) {
  std::vector<Relation> out;
  size_t pos = 0;
  auto read_pos = [&](size_t& i) {
    while (i < spec.size() && (spec[i] == ' ' || spec[i] == ';')) ++i;
    if (i >= spec.size()) return Position{0, 0};
    if (spec[i] != '(') throw std::runtime_error("bad relation spec: " + spec);
    size_t close = spec.find(')', i);
    std::string body = spec.substr(i + 1, close - i - 1);
    i = close + 1;
    size_t comma = body.find(',');
    return Position{std::stoi(body.substr(0, comma)), std::stoi(body.substr(comma + 1))};
  };
  while (true) {
    while (pos < spec.size() && (spec[pos] == ' ' || spec[pos] == ';')) ++pos;
    if (pos >= spec.size()) break;
    Position from = read_pos(pos);
    RelKind kind;
    if (spec.compare(pos, 2, ">=") == 0) {
      kind = RelKind::ge;
      pos += 2;
    } else if (spec[pos] == '>') {
      kind = RelKind::gt;
      pos += 1;
    } else {
      throw std::runtime_error("bad relation operator in: " + spec);
    }
    Position to = read_pos(pos);
    out.push_back({kind, from, to});
  }
  return RelationSet(n, out);
}

// Orders each component's top-row positions by an explicit chain of weak
// top relations (ascending columns); the extended-set convention requires
// the top positions of a component to carry an order.
inline RelationSet complete_top_order(const RelationSet& c) {
  RelationSet out = c;
  for (const RelationSet& comp : decompose(c)) {
    std::vector<Position> tops;
    for (Position p : comp.positions())
      if (p.row == c.n()) tops.push_back(p);
    std::sort(tops.begin(), tops.end());
    for (size_t i = 0; i + 1 < tops.size(); ++i) {
      Relation r{RelKind::ge, tops[i], tops[i + 1]};
      if (!out.contains(r)) out = out.with(r);
    }
  }
  return out;
}

// Random noncritical subsets of R, completed with per-component top-row
// chains so that the extended-set conventions hold.
template <typename Rng>
RelationSet random_noncritical(Rng& rng, int n, int max_rels, bool ordered_top = true) {
  std::vector<Relation> pool = all_adjacent_relations(n);
  while (true) {
    std::shuffle(pool.begin(), pool.end(), rng);
    int m = 1 + static_cast<int>(rng() % max_rels);
    RelationSet c(n, {pool.begin(), pool.begin() + m});
    if (!is_satisfiable(c)) continue;
    if (ordered_top) {
      c = complete_top_order(c);
      if (!is_satisfiable(c)) continue;
    }
    if (!is_noncritical_set(c)) continue;
    return c;
  }
}

template <typename Rng>
RowPermutation random_sigma(Rng& rng, int n) {
  RowPermutation s = RowPermutation::identity(n);
  for (int k = 2; k <= n; ++k) std::shuffle(s.perm[k - 1].begin(), s.perm[k - 1].end(), rng);
  return s;
}

// Independent dimension oracle: Weyl product formula for gl_n weights.
inline Int weyl_dimension(const std::vector<Int>& lambda) {
  const int n = static_cast<int>(lambda.size());
  Rat dim = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      dim *= Rat(lambda[i - 1] - lambda[j - 1] + j - i, j - i);
  if (!is_integer(dim)) throw std::runtime_error("Weyl product is not an integer");
  return numerator(dim);
}

// Top row of the standard basis for highest weight lambda: l_{nj} = lambda_j - j + 1.
inline std::vector<Entry> top_row_for(const std::vector<Int>& lambda) {
  std::vector<Entry> top;
  for (size_t j = 1; j <= lambda.size(); ++j)
    top.push_back(Entry{"0", lambda[j - 1] - Int(j) + 1});
  return top;
}

}  // namespace gtt

#endif
