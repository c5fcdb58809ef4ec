#include "matchfield/standard_basis.hpp"

#include <algorithm>
#include <stdexcept>

#include "matchfield/swaps.hpp"

namespace mf {

namespace {

int block_count(const std::vector<int>& sorted, int ell) {
  int c = 0;
  for (int e : sorted)
    if (e <= ell) ++c;
  return c;
}

// A column of size >= 2 is (12)-arranged exactly when it meets the first
// block in one element.
bool swapped(const std::vector<int>& sorted, int ell) {
  return sorted.size() >= 2 && block_count(sorted, ell) == 1;
}

std::vector<int> arrange(const std::vector<int>& sorted, int ell) {
  std::vector<int> col = sorted;
  if (swapped(sorted, ell)) std::swap(col[0], col[1]);
  return col;
}

std::vector<int> sorted_content(const std::vector<int>& col) {
  std::vector<int> s = col;
  std::sort(s.begin(), s.end());
  return s;
}

// Break row of type 3B: least t >= 2 with j_{t+1} > i_t, reading j_{k+1}
// as +infinity.
int break_row(const std::vector<int>& i_sorted, const std::vector<int>& j_sorted) {
  const int k = static_cast<int>(i_sorted.size());
  for (int t = 2; t < k; ++t)
    if (j_sorted[t] > i_sorted[t - 1]) return t;
  return k;
}

}  // namespace

std::string GrClassification::tag() const {
  switch (type) {
    case GrType::T1: return "1";
    case GrType::T2: return "2";
    case GrType::T3A: return "3A";
    case GrType::T3B: return "3B(" + std::to_string(param) + ")";
    case GrType::T3C: return "3C(" + std::to_string(param) + ")";
    case GrType::T3D: return "3D(" + std::to_string(param) + ")";
    case GrType::NotInBasis: return "NotInBasis";
  }
  return "?";
}

bool SSYT::valid() const {
  if (left.size() < right.size() || right.empty()) return false;
  for (size_t r = 0; r < left.size(); ++r) {
    if (left[r] < 1 || left[r] > n) return false;
    if (r > 0 && left[r] <= left[r - 1]) return false;
  }
  for (size_t r = 0; r < right.size(); ++r) {
    if (right[r] < 1 || right[r] > n) return false;
    if (r > 0 && right[r] <= right[r - 1]) return false;
    if (left[r] > right[r]) return false;
  }
  return true;
}

Tableau SSYT::as_tableau() const { return Tableau(n, {left, right}); }

std::string SSYT::to_string() const { return as_tableau().to_string(); }

GrClassification classify_gr(const Tableau& t, int ell) {
  if (t.column_count() != 2)
    throw std::invalid_argument("classify_gr: need exactly two columns");
  const auto a = sorted_content(t.columns[0]);
  const auto b = sorted_content(t.columns[1]);
  if (a.size() != b.size())
    throw std::invalid_argument("classify_gr: columns must have equal size");
  const int k = static_cast<int>(a.size());

  GrClassification res;
  auto finish = [&](GrType type, int param, int break_row, const std::vector<int>& i_sorted,
                    const std::vector<int>& j_sorted) {
    res.type = type;
    res.param = param;
    res.break_row = break_row;
    res.left = arrange(i_sorted, ell);
    res.right = arrange(j_sorted, ell);
    return res;
  };

  auto dominated = [&](const std::vector<int>& lo, const std::vector<int>& hi) {
    for (int r = 0; r < k; ++r)
      if (lo[r] > hi[r]) return false;
    return true;
  };

  const bool swap_a = swapped(a, ell), swap_b = swapped(b, ell);

  if (!swap_a && !swap_b) {
    if (dominated(a, b)) return finish(GrType::T1, 0, 0, a, b);
    if (dominated(b, a)) return finish(GrType::T1, 0, 0, b, a);
    return res;
  }
  if (swap_a && swap_b) {
    if (dominated(a, b)) return finish(GrType::T2, 0, 0, a, b);
    if (dominated(b, a)) return finish(GrType::T2, 0, 0, b, a);
    return res;
  }

  // Exactly one column is (12)-arranged; it plays I.
  const auto& i_sorted = swap_a ? a : b;
  const auto& j_sorted = swap_a ? b : a;
  const int beta = block_count(j_sorted, ell);

  auto tail_dominated = [&](int from_row) {  // i_t <= j_t for all t > from_row (1-based)
    for (int r = from_row; r < k; ++r)
      if (i_sorted[r] > j_sorted[r]) return false;
    return true;
  };
  auto middle_exceeds = [&](int from_row, int to_row) {  // i_t > j_t on [from_row, to_row]
    for (int t = from_row; t <= to_row; ++t)
      if (i_sorted[t - 1] <= j_sorted[t - 1]) return false;
    return true;
  };

  if (beta == 0) {
    if (i_sorted[1] <= j_sorted[0] && tail_dominated(2))
      return finish(GrType::T3A, 0, 0, i_sorted, j_sorted);
    if (j_sorted[1] <= i_sorted[1]) {
      const int r = break_row(i_sorted, j_sorted);
      if (middle_exceeds(3, r) && tail_dominated(r))
        return finish(GrType::T3B, r, r, i_sorted, j_sorted);
    }
    return res;
  }

  // beta == 1 would make J (12)-arranged, contradicting its shape. For
  // beta >= 2 the map swaps the first-block prefix of J and keeps
  // swapping through the interleaved block-two rows up to the same break
  // row as in type 3B; the break always lies at or beyond the prefix.
  if (beta >= 2) {
    const int s = beta;
    const int r = break_row(i_sorted, j_sorted);
    if (middle_exceeds(3, r) && tail_dominated(r)) {
      if (i_sorted[0] <= j_sorted[0]) return finish(GrType::T3C, s, r, i_sorted, j_sorted);
      if (i_sorted[0] >= j_sorted[1]) return finish(GrType::T3D, s, r, i_sorted, j_sorted);
    }
  }
  return res;
}

SSYT s_gr(const Tableau& t, int ell) {
  GrClassification c = classify_gr(t, ell);
  if (!c.in_basis()) throw std::invalid_argument("s_gr: tableau is not in the typed family");
  const std::vector<int> i_sorted = sorted_content(c.left);
  const std::vector<int> j_sorted = sorted_content(c.right);
  const int k = static_cast<int>(i_sorted.size());

  SSYT u;
  u.n = t.n;
  switch (c.type) {
    case GrType::T1:
    case GrType::T2:
    case GrType::T3A:
      u.left = i_sorted;
      u.right = j_sorted;
      break;
    case GrType::T3B:
    case GrType::T3C: {
      const int x = c.break_row;
      u.left.push_back(i_sorted[0]);
      for (int r = 2; r <= x; ++r) u.left.push_back(j_sorted[r - 1]);
      for (int r = x + 1; r <= k; ++r) u.left.push_back(i_sorted[r - 1]);
      u.right.push_back(j_sorted[0]);
      for (int r = 2; r <= x; ++r) u.right.push_back(i_sorted[r - 1]);
      for (int r = x + 1; r <= k; ++r) u.right.push_back(j_sorted[r - 1]);
      break;
    }
    case GrType::T3D: {
      // The 3D image exchanges the whole first row as well; repeating the
      // 3C recipe verbatim would break semi-standardness once i_1 >= j_2.
      // Verified by the exhaustive two-sided inverse checks.
      const int x = c.break_row;
      for (int r = 1; r <= x; ++r) u.left.push_back(j_sorted[r - 1]);
      for (int r = x + 1; r <= k; ++r) u.left.push_back(i_sorted[r - 1]);
      for (int r = 1; r <= x; ++r) u.right.push_back(i_sorted[r - 1]);
      for (int r = x + 1; r <= k; ++r) u.right.push_back(j_sorted[r - 1]);
      break;
    }
    case GrType::NotInBasis: break;
  }
  if (!u.valid()) throw std::logic_error("s_gr: image is not semi-standard");
  return u;
}

Tableau s_gr_inverse(const SSYT& u, int ell) {
  if (!u.valid() || u.left.size() != u.right.size())
    throw std::invalid_argument("s_gr_inverse: need a rectangular semi-standard tableau");
  const int k = static_cast<int>(u.left.size());
  const int alpha = block_count(u.left, ell);
  const int beta = block_count(u.right, ell);

  auto build = [&](const std::vector<int>& i_elems, const std::vector<int>& j_elems) {
    std::vector<int> i_sorted = i_elems, j_sorted = j_elems;
    std::sort(i_sorted.begin(), i_sorted.end());
    std::sort(j_sorted.begin(), j_sorted.end());
    return Tableau(u.n, {arrange(i_sorted, ell), arrange(j_sorted, ell)});
  };

  Tableau t;
  if (k == 1 || (alpha != 1 && beta != 1)) {
    t = build(u.left, u.right);           // type 1
  } else if (alpha == 1 && beta == 1) {
    t = build(u.left, u.right);           // type 2
  } else if (alpha == 1 && beta == 0) {
    if (u.left[1] <= u.right[0]) {
      t = build(u.left, u.right);         // type 3A
    } else {
      // Break row read off the image: least t >= 2 with u_{t+1} > v_t.
      const int rr = break_row(u.right, u.left);
      std::vector<int> i_elems{u.left[0]}, j_elems{u.right[0]};
      for (int q = 2; q <= rr; ++q) {
        i_elems.push_back(u.right[q - 1]);
        j_elems.push_back(u.left[q - 1]);
      }
      for (int q = rr + 1; q <= k; ++q) {
        i_elems.push_back(u.left[q - 1]);
        j_elems.push_back(u.right[q - 1]);
      }
      t = build(i_elems, j_elems);        // type 3B
    }
  } else if (alpha >= 2 && beta == 1) {
    // Same break row as in the 3B reading of the image; it sits at or
    // beyond the first-block prefix.
    const int rr = break_row(u.right, u.left);
    std::vector<int> i_elems, j_elems;
    if (u.left[1] > u.right[0]) {         // type 3C
      i_elems.push_back(u.left[0]);
      j_elems.push_back(u.right[0]);
      for (int q = 2; q <= rr; ++q) {
        i_elems.push_back(u.right[q - 1]);
        j_elems.push_back(u.left[q - 1]);
      }
    } else {                              // type 3D
      for (int q = 1; q <= rr; ++q) {
        i_elems.push_back(u.right[q - 1]);
        j_elems.push_back(u.left[q - 1]);
      }
    }
    for (int q = rr + 1; q <= k; ++q) {
      i_elems.push_back(u.left[q - 1]);
      j_elems.push_back(u.right[q - 1]);
    }
    t = build(i_elems, j_elems);
  } else {
    // alpha == 0 && beta == 1 cannot happen in a semi-standard tableau.
    throw std::logic_error("s_gr_inverse: impossible block signature");
  }
  return t;
}

std::string FlagClassification::tag() const {
  switch (category) {
    case FlagCategory::Rectangular: return "1." + gr.tag();
    case FlagCategory::Extended: return "2." + gr.tag();
    case FlagCategory::SingleRight: return single;
    case FlagCategory::NotInBasis: return "NotInBasis";
  }
  return "?";
}

namespace {

struct Shape {
  std::vector<int> longer, shorter;  // arranged columns
};

Shape split_columns(const Tableau& t) {
  if (t.column_count() != 2)
    throw std::invalid_argument("classify_flag: need exactly two columns");
  Shape s;
  if (t.columns[0].size() >= t.columns[1].size()) {
    s.longer = t.columns[0];
    s.shorter = t.columns[1];
  } else {
    s.longer = t.columns[1];
    s.shorter = t.columns[0];
  }
  if (s.shorter.empty()) throw std::invalid_argument("classify_flag: empty column");
  return s;
}

}  // namespace

FlagClassification classify_flag(const Tableau& t, int ell) {
  FlagClassification res;
  if (t.column_count() == 1) return res;  // one column is never in the family
  Shape sh = split_columns(t);
  const int s = static_cast<int>(sh.longer.size());
  const int tt = static_cast<int>(sh.shorter.size());

  if (s == tt) {
    res.gr = classify_gr(t, ell);
    if (res.gr.in_basis()) res.category = FlagCategory::Rectangular;
    return res;
  }

  if (tt >= 2) {
    std::vector<int> top(sh.longer.begin(), sh.longer.begin() + tt);
    Tableau block(t.n, {top, sh.shorter});
    GrClassification grc = classify_gr(block, ell);
    if (!grc.in_basis()) return res;
    // The tail may extend only the column whose largest top-block entry
    // is the smaller one (ties go to I).
    const int max_i = *std::max_element(grc.left.begin(), grc.left.end());
    const int max_j = *std::max_element(grc.right.begin(), grc.right.end());
    const std::vector<int>& prescribed = max_i <= max_j ? grc.left : grc.right;
    if (sorted_content(prescribed) != sorted_content(top)) return res;
    // With equal contents the arrangements also agree, so the block
    // classification applies to this tableau verbatim.
    res.category = FlagCategory::Extended;
    res.gr = grc;
    return res;
  }

  // t == 1, s >= 2
  const std::vector<int> i_sorted = sorted_content(sh.longer);
  const int j1 = sh.shorter[0];
  const bool sw = swapped(i_sorted, ell);
  const bool j_first = j1 <= ell;
  auto single = [&](const char* tag) {
    res.category = FlagCategory::SingleRight;
    res.single = tag;
    return res;
  };
  if (!sw) {
    if (i_sorted[1] <= ell) {  // i1, i2 in the first block
      if (i_sorted[0] <= j1) return single("3A(1)");
    } else if (i_sorted[0] > ell) {  // whole column in the second block
      if (j_first) return single("3B");
      if (i_sorted[0] <= j1) return single("3A(2)");
    }
    return res;
  }
  if (!j_first && i_sorted[1] <= j1) return single("3C");
  if (j_first && i_sorted[0] <= j1) return single("3D");
  return res;
}

bool in_basis(const Tableau& t, int ell) { return classify_flag(t, ell).in_basis(); }

SSYT s_flag(const Tableau& t, int ell) {
  FlagClassification c = classify_flag(t, ell);
  if (!c.in_basis()) throw std::invalid_argument("s_flag: tableau is not in the typed family");

  if (c.category == FlagCategory::Rectangular) return s_gr(t, ell);

  Shape sh = split_columns(t);
  if (c.category == FlagCategory::Extended) {
    const int tt = static_cast<int>(sh.shorter.size());
    std::vector<int> top(sh.longer.begin(), sh.longer.begin() + tt);
    SSYT u = s_gr(Tableau(t.n, {top, sh.shorter}), ell);
    u.left.insert(u.left.end(), sh.longer.begin() + tt, sh.longer.end());
    if (!u.valid()) throw std::logic_error("s_flag: extended image is not semi-standard");
    return u;
  }

  SSYT u;
  u.n = t.n;
  std::vector<int> i_sorted = sorted_content(sh.longer);
  if (c.single == "3B") {
    u.left = i_sorted;
    u.left[0] = sh.shorter[0];
    u.right = {i_sorted[0]};
  } else {  // 3A(1), 3A(2), 3C, 3D all sort the long column
    u.left = i_sorted;
    u.right = {sh.shorter[0]};
  }
  if (!u.valid()) throw std::logic_error("s_flag: image is not semi-standard");
  return u;
}

Tableau s_flag_inverse(const SSYT& u, int ell) {
  if (!u.valid()) throw std::invalid_argument("s_flag_inverse: input is not semi-standard");
  const int s = static_cast<int>(u.left.size());
  const int t = static_cast<int>(u.right.size());

  if (s == t) return s_gr_inverse(u, ell);

  if (t >= 2) {
    SSYT top;
    top.n = u.n;
    top.left.assign(u.left.begin(), u.left.begin() + t);
    top.right = u.right;
    Tableau block = s_gr_inverse(top, ell);
    std::vector<int> ci = sorted_content(block.columns[0]);
    std::vector<int> cj = sorted_content(block.columns[1]);
    std::vector<int>& extended = ci.back() <= cj.back() ? ci : cj;
    extended.insert(extended.end(), u.left.begin() + t, u.left.end());
    std::sort(extended.begin(), extended.end());
    return Tableau(u.n, {arrange(ci, ell), arrange(cj, ell)});
  }

  // t == 1
  const int v1 = u.right[0];
  std::vector<int> left = u.left;
  if (u.left[0] <= ell && u.left[1] <= ell) return Tableau(u.n, {left, {v1}});  // 3A(1)
  if (u.left[0] > ell) return Tableau(u.n, {left, {v1}});                       // 3A(2)
  if (v1 <= ell) {
    // u1, v1 first block, u2 second: type 3D preimage
    return Tableau(u.n, {arrange(left, ell), {v1}});
  }
  if (v1 < u.left[1]) {  // type 3B preimage
    std::vector<int> col{v1};
    col.insert(col.end(), u.left.begin() + 1, u.left.end());
    return Tableau(u.n, {col, {u.left[0]}});
  }
  return Tableau(u.n, {arrange(left, ell), {v1}});  // type 3C preimage
}

Tableau normalize_to_basis(const Tableau& t, int ell) {
  MatchingField field = MatchingField::block(t.n, ell);
  if (!t.valid_for(field))
    throw std::invalid_argument("normalize_to_basis: tableau is not arranged for B_ell");
  std::vector<Tableau> members;
  for (const Tableau& cand : row_class(t, field))
    if (in_basis(cand, ell)) members.push_back(cand);
  if (members.size() != 1)
    throw std::logic_error("normalize_to_basis: expected exactly one basis member, found " +
                           std::to_string(members.size()) + " for " + t.to_string());
  return members.front();
}

std::vector<SSYT> all_ssyt(int n, int s, int t) {
  std::vector<SSYT> out;
  auto lefts = all_k_subsets(n, s);
  auto rights = all_k_subsets(n, t);
  for (const Subset& l : lefts)
    for (const Subset& r : rights) {
      SSYT u;
      u.n = n;
      u.left = l.elems;
      u.right = r.elems;
      if (u.valid()) out.push_back(std::move(u));
    }
  return out;
}

std::vector<Tableau> all_two_column_tableaux(int n, int ell, int s, int t) {
  std::vector<Tableau> out;
  auto longs = all_k_subsets(n, s);
  auto shorts = all_k_subsets(n, t);
  for (size_t i = 0; i < longs.size(); ++i) {
    for (size_t j = s == t ? i : 0; j < shorts.size(); ++j) {
      out.emplace_back(n, std::vector<std::vector<int>>{arrange(longs[i].elems, ell),
                                                        arrange(shorts[j].elems, ell)});
    }
  }
  return out;
}

}  // namespace mf
