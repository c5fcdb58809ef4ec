#include "matchfield/face_lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "matchfield/parallel.hpp"

namespace mf {

namespace {

using Mask = std::uint64_t;

// Maximal proper faces (covers) of the face with vertex set `face`.
std::vector<Mask> covers_of(Mask face, const std::vector<Mask>& facet_masks) {
  std::vector<Mask> cand;
  for (Mask fm : facet_masks) {
    Mask g = face & fm;
    if (g != face && g != 0) cand.push_back(g);
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<Mask> maximal;
  for (Mask g : cand) {
    bool top = true;
    for (Mask h : cand)
      if (g != h && (g & ~h) == 0) {
        top = false;
        break;
      }
    if (top) maximal.push_back(g);
  }
  return maximal;
}

FaceLattice enumerate(const ConvexHull& hull, bool parallel) {
  FaceLattice lattice;
  lattice.dim = hull.affine_dim;
  if (hull.affine_dim == 0) {
    lattice.f_vector = {};
    lattice.total_faces = 0;
    return lattice;
  }

  const int vcount = hull.vertex_count();
  std::vector<Mask> facet_masks;
  facet_masks.reserve(hull.facets.size());
  for (const auto& f : hull.facets) facet_masks.push_back(f.vertex_mask);

  const Mask full = vcount == 64 ? ~Mask(0) : (Mask(1) << vcount) - 1;
  lattice.f_vector.assign(hull.affine_dim, 0);

  std::vector<Mask> level{full};
  for (int dd = hull.affine_dim - 1; dd >= 0; --dd) {
    std::unordered_set<Mask> next;
    if (parallel) {
      std::vector<std::vector<Mask>> chunks(level.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
      for (long i = 0; i < static_cast<long>(level.size()); ++i)
        chunks[i] = covers_of(level[i], facet_masks);
      for (const auto& c : chunks) next.insert(c.begin(), c.end());
    } else {
      for (Mask face : level)
        for (Mask g : covers_of(face, facet_masks)) next.insert(g);
    }
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end());
    lattice.f_vector[dd] = level.size();
    lattice.total_faces += level.size();
  }

  // The bottom level must be exactly the vertices.
  for (Mask v : level)
    if (__builtin_popcountll(v) != 1)
      throw std::logic_error("face_lattice: bottom level contains a non-vertex");
  if (lattice.f_vector[0] != static_cast<std::size_t>(vcount))
    throw std::logic_error("face_lattice: vertex count mismatch");
  return lattice;
}

struct Incidence {
  int vcount = 0, fcount = 0;
  std::vector<Mask> vertex_facets;  // per vertex: incident facets
  std::vector<Mask> facet_vertices;
};

Incidence incidence_of(const ConvexHull& hull) {
  Incidence inc;
  inc.vcount = hull.vertex_count();
  inc.fcount = hull.facet_count();
  if (inc.fcount > 64) throw std::invalid_argument("combinatorially_isomorphic: too many facets");
  inc.vertex_facets.assign(inc.vcount, 0);
  inc.facet_vertices.reserve(inc.fcount);
  for (int f = 0; f < inc.fcount; ++f) {
    Mask vm = hull.facets[f].vertex_mask;
    inc.facet_vertices.push_back(vm);
    for (int v = 0; v < inc.vcount; ++v)
      if (vm >> v & 1) inc.vertex_facets[v] |= Mask(1) << f;
  }
  return inc;
}

// Iterated degree refinement over the bipartite incidence graph; returns
// stable vertex/facet colors.
void refine_colors(const Incidence& inc, std::vector<int>& vcol, std::vector<int>& fcol) {
  vcol.assign(inc.vcount, 0);
  fcol.assign(inc.fcount, 0);
  size_t classes = 1;
  for (int round = 0; round < inc.vcount + inc.fcount; ++round) {
    std::map<std::vector<int>, int> codes;
    std::vector<int> nvcol(inc.vcount), nfcol(inc.fcount);
    for (int v = 0; v < inc.vcount; ++v) {
      std::vector<int> sig{0, vcol[v]};
      std::vector<int> nb;
      for (int f = 0; f < inc.fcount; ++f)
        if (inc.vertex_facets[v] >> f & 1) nb.push_back(fcol[f]);
      std::sort(nb.begin(), nb.end());
      sig.insert(sig.end(), nb.begin(), nb.end());
      nvcol[v] = codes.emplace(sig, static_cast<int>(codes.size())).first->second;
    }
    for (int f = 0; f < inc.fcount; ++f) {
      std::vector<int> sig{1, fcol[f]};
      std::vector<int> nb;
      for (int v = 0; v < inc.vcount; ++v)
        if (inc.facet_vertices[f] >> v & 1) nb.push_back(vcol[v]);
      std::sort(nb.begin(), nb.end());
      sig.insert(sig.end(), nb.begin(), nb.end());
      nfcol[f] = codes.emplace(sig, static_cast<int>(codes.size())).first->second;
    }
    vcol.swap(nvcol);
    fcol.swap(nfcol);
    if (codes.size() == classes) break;
    classes = codes.size();
  }
}

}  // namespace

FaceLattice face_lattice_serial(const ConvexHull& hull) { return enumerate(hull, false); }
FaceLattice face_lattice_parallel(const ConvexHull& hull) { return enumerate(hull, true); }
FaceLattice face_lattice(const ConvexHull& hull) { return enumerate(hull, thread_count() > 1); }

bool combinatorially_isomorphic(const ConvexHull& a, const ConvexHull& b) {
  Incidence ia = incidence_of(a), ib = incidence_of(b);
  if (ia.vcount != ib.vcount || ia.fcount != ib.fcount) return false;

  std::vector<int> vca, fca, vcb, fcb;
  refine_colors(ia, vca, fca);
  refine_colors(ib, vcb, fcb);
  {
    std::vector<int> ha = vca, hb = vcb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return false;
    ha = fca;
    hb = fcb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return false;
  }

  // Backtracking vertex bijection respecting colors, pairwise common-facet
  // counts, and finally the facet family itself.
  const int vcount = ia.vcount;
  std::vector<int> order(vcount);
  for (int i = 0; i < vcount; ++i) order[i] = i;
  std::vector<int> class_size(vcount, 0);
  for (int v = 0; v < vcount; ++v) {
    for (int w = 0; w < vcount; ++w)
      if (vca[w] == vca[v]) ++class_size[v];
  }
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (class_size[x] != class_size[y]) return class_size[x] < class_size[y];
    return x < y;
  });

  std::vector<int> image(vcount, -1);
  std::vector<char> used(vcount, 0);

  std::unordered_set<Mask> facet_set_b(ib.facet_vertices.begin(), ib.facet_vertices.end());

  auto facets_match = [&]() {
    std::unordered_set<Mask> mapped;
    for (Mask fa : ia.facet_vertices) {
      Mask fb = 0;
      for (int v = 0; v < vcount; ++v)
        if (fa >> v & 1) fb |= Mask(1) << image[v];
      if (!facet_set_b.count(fb)) return false;
      mapped.insert(fb);
    }
    return mapped.size() == facet_set_b.size();
  };

  auto backtrack = [&](auto&& self, int pos) -> bool {
    if (pos == vcount) return facets_match();
    const int v = order[pos];
    for (int w = 0; w < vcount; ++w) {
      if (used[w] || vcb[w] != vca[v]) continue;
      bool ok = true;
      for (int q = 0; q < pos && ok; ++q) {
        const int u = order[q];
        ok = __builtin_popcountll(ia.vertex_facets[v] & ia.vertex_facets[u]) ==
             __builtin_popcountll(ib.vertex_facets[w] & ib.vertex_facets[image[u]]);
      }
      if (!ok) continue;
      image[v] = w;
      used[w] = 1;
      if (self(self, pos + 1)) return true;
      used[w] = 0;
      image[v] = -1;
    }
    return false;
  };
  return backtrack(backtrack, 0);
}

}  // namespace mf
