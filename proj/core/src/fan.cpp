#include "torcob/fan.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace torcob {

Cone::Cone(std::vector<int> r) : rays(std::move(r)) {
  std::sort(rays.begin(), rays.end());
}

bool Cone::contains(int ray) const {
  return std::binary_search(rays.begin(), rays.end(), ray);
}

bool Cone::is_subset_of(const Cone& other) const {
  return std::includes(other.rays.begin(), other.rays.end(), rays.begin(),
                       rays.end());
}

std::string Cone::to_string() const {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < rays.size(); ++i) os << (i ? "," : "") << rays[i] + 1;
  os << "}";
  return os.str();
}

void ValidationReport::fail(std::string msg) {
  ok = false;
  violations.push_back(std::move(msg));
}

namespace {

bool point_in_smooth_cone(const LatticeVector& v, const OrbitData& od) {
  for (const auto& chi : od.duals)
    if (dot(chi, v) < 0) return false;
  for (const auto& chi : od.completion_duals)
    if (dot(chi, v) != 0) return false;
  return true;
}

OrbitData make_orbit_data(const Cone& c, const std::vector<LatticeVector>& rays,
                          int rank) {
  OrbitData od;
  od.cone = c;
  for (int r : c.rays) od.basis.push_back(rays[r]);
  DualBasisResult db = dual_basis(od.basis, rank);
  od.duals = std::move(db.duals);
  od.completion = std::move(db.completion);
  od.completion_duals = std::move(db.completion_duals);
  return od;
}

}  // namespace

ValidationReport Fan::validate(int rank, const std::vector<LatticeVector>& rays,
                               const std::vector<std::vector<int>>& max_cones) {
  ValidationReport rep;
  if (rank < 1) {
    rep.fail("lattice rank must be at least 1");
    return rep;
  }

  const int m = static_cast<int>(rays.size());
  std::vector<bool> ray_ok(m, true);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(rays[i].size()) != rank) {
      rep.fail("ray " + std::to_string(i + 1) + ": expected " +
               std::to_string(rank) + " coordinates");
      ray_ok[i] = false;
      continue;
    }
    if (!is_primitive(rays[i])) {
      rep.fail("ray " + std::to_string(i + 1) +
               ": not a primitive nonzero vector");
      ray_ok[i] = false;
    }
    for (int j = 0; j < i; ++j)
      if (ray_ok[j] && rays[j] == rays[i])
        rep.fail("ray " + std::to_string(i + 1) + " duplicates ray " +
                 std::to_string(j + 1));
  }

  const int k = static_cast<int>(max_cones.size());
  if (k == 0) rep.fail("no maximal cones given");

  std::vector<Cone> cones;
  std::vector<bool> cone_ok(k, true);
  std::vector<bool> used(m, false);
  for (int c = 0; c < k; ++c) {
    std::set<int> seen;
    for (int r : max_cones[c]) {
      if (r < 0 || r >= m) {
        rep.fail("cone " + std::to_string(c + 1) + ": ray index " +
                 std::to_string(r + 1) + " out of range");
        cone_ok[c] = false;
        continue;
      }
      if (!seen.insert(r).second) {
        rep.fail("cone " + std::to_string(c + 1) + ": repeated ray index " +
                 std::to_string(r + 1));
        cone_ok[c] = false;
      }
      used[r] = true;
      if (!ray_ok[r]) cone_ok[c] = false;
    }
    cones.emplace_back(std::vector<int>(seen.begin(), seen.end()));
  }
  for (int i = 0; i < m; ++i)
    if (ray_ok[i] && !used[i])
      rep.fail("ray " + std::to_string(i + 1) + " is not used by any cone");

  for (int c = 0; c < k; ++c) {
    for (int d = 0; d < c; ++d) {
      if (!cone_ok[c] || !cone_ok[d]) continue;
      if (cones[c] == cones[d])
        rep.fail("cone " + std::to_string(c + 1) + " duplicates cone " +
                 std::to_string(d + 1));
      else if (cones[c].is_subset_of(cones[d]))
        rep.fail("cone " + std::to_string(c + 1) + " is contained in cone " +
                 std::to_string(d + 1) + " (not maximal)");
      else if (cones[d].is_subset_of(cones[c]))
        rep.fail("cone " + std::to_string(d + 1) + " is contained in cone " +
                 std::to_string(c + 1) + " (not maximal)");
    }
  }

  // Smoothness: the rays of each cone must be part of a Z-basis.
  std::vector<bool> smooth(k, false);
  std::map<std::vector<int>, OrbitData> orbit;
  for (int c = 0; c < k; ++c) {
    if (!cone_ok[c]) continue;
    std::vector<LatticeVector> gens;
    for (int r : cones[c].rays) gens.push_back(rays[r]);
    if (!extends_to_basis(gens)) {
      rep.fail("cone " + std::to_string(c + 1) + " " + cones[c].to_string() +
               ": ray generators do not extend to a Z-basis (not smooth)");
      continue;
    }
    smooth[c] = true;
    orbit.emplace(cones[c].rays, make_orbit_data(cones[c], rays, rank));
  }

  // Fan condition, checked pairwise: a generator of one cone may lie in the
  // other only if it is a shared ray. Sufficient for unimodular simplicial
  // cones, where every subset of generators spans a face.
  for (int c = 0; c < k; ++c)
    for (int d = c + 1; d < k; ++d) {
      if (!smooth[c] || !smooth[d]) continue;
      const OrbitData& oc = orbit.at(cones[c].rays);
      const OrbitData& od = orbit.at(cones[d].rays);
      for (int r : cones[c].rays)
        if (!cones[d].contains(r) && point_in_smooth_cone(rays[r], od))
          rep.fail("cones " + std::to_string(c + 1) + " and " +
                   std::to_string(d + 1) + " violate the fan condition: ray " +
                   std::to_string(r + 1) + " lies in cone " +
                   std::to_string(d + 1) + " but is not shared");
      for (int r : cones[d].rays)
        if (!cones[c].contains(r) && point_in_smooth_cone(rays[r], oc))
          rep.fail("cones " + std::to_string(c + 1) + " and " +
                   std::to_string(d + 1) + " violate the fan condition: ray " +
                   std::to_string(r + 1) + " lies in cone " +
                   std::to_string(c + 1) + " but is not shared");
    }

  return rep;
}

Fan Fan::make(int rank, std::vector<LatticeVector> rays,
              std::vector<std::vector<int>> max_cones, std::string name) {
  ValidationReport rep = validate(rank, rays, max_cones);
  if (!rep.ok) {
    std::string msg = "invalid fan";
    if (!name.empty()) msg += " '" + name + "'";
    for (const auto& v : rep.violations) msg += "\n  - " + v;
    throw FanError(msg);
  }
  Fan f;
  f.rank_ = rank;
  f.name_ = std::move(name);
  f.rays_ = std::move(rays);
  for (auto& c : max_cones) f.max_cones_.emplace_back(std::move(c));
  f.build_caches();
  return f;
}

void Fan::build_caches() {
  std::set<Cone> faces;
  for (const Cone& mc : max_cones_) {
    const int d = mc.dim();
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      std::vector<int> sub;
      for (int b = 0; b < d; ++b)
        if (mask & (1u << b)) sub.push_back(mc.rays[b]);
      faces.insert(Cone(std::move(sub)));
    }
  }
  faces_.assign(faces.begin(), faces.end());
  std::sort(faces_.begin(), faces_.end(), [](const Cone& a, const Cone& b) {
    return a.dim() != b.dim() ? a.dim() < b.dim() : a.rays < b.rays;
  });

  for (const Cone& f : faces_)
    orbits_.emplace(f.rays, make_orbit_data(f, rays_, rank_));

  // Minimal nonfaces have at most rank+1 rays: all proper subsets are faces
  // and faces have at most rank rays.
  const int m = num_rays();
  std::vector<int> pick;
  auto is_face_set = [&](const std::vector<int>& s) {
    return faces.count(Cone(std::vector<int>(s))) > 0;
  };
  auto minimal = [&](const std::vector<int>& s) {
    if (is_face_set(s)) return false;
    std::vector<int> sub;
    for (size_t skip = 0; skip < s.size(); ++skip) {
      sub.clear();
      for (size_t i = 0; i < s.size(); ++i)
        if (i != skip) sub.push_back(s[i]);
      if (!is_face_set(sub)) return false;
    }
    return true;
  };
  std::function<void(int)> rec = [&](int start) {
    if (!pick.empty() && minimal(pick)) {
      minimal_nonfaces_.emplace_back(std::vector<int>(pick));
      return;  // supersets cannot be minimal
    }
    if (static_cast<int>(pick.size()) == rank_ + 1) return;
    for (int r = start; r < m; ++r) {
      pick.push_back(r);
      rec(r + 1);
      pick.pop_back();
    }
  };
  rec(0);
  std::sort(minimal_nonfaces_.begin(), minimal_nonfaces_.end(),
            [](const Cone& a, const Cone& b) {
              return a.dim() != b.dim() ? a.dim() < b.dim() : a.rays < b.rays;
            });

  complete_ = !max_cones_.empty();
  for (const Cone& mc : max_cones_)
    if (mc.dim() != rank_) complete_ = false;
  if (complete_) {
    std::map<std::vector<int>, int> ridge_count;
    for (const Cone& mc : max_cones_)
      for (size_t skip = 0; skip < mc.rays.size(); ++skip) {
        std::vector<int> ridge;
        for (size_t i = 0; i < mc.rays.size(); ++i)
          if (i != skip) ridge.push_back(mc.rays[i]);
        ++ridge_count[ridge];
      }
    for (const auto& [ridge, count] : ridge_count)
      if (count != 2) complete_ = false;
  }
}

bool Fan::is_face(const Cone& c) const {
  return std::binary_search(
      faces_.begin(), faces_.end(), c, [](const Cone& a, const Cone& b) {
        return a.dim() != b.dim() ? a.dim() < b.dim() : a.rays < b.rays;
      });
}

const OrbitData& Fan::orbit_data(const Cone& face) const {
  auto it = orbits_.find(face.rays);
  if (it == orbits_.end())
    throw std::invalid_argument("orbit_data: " + face.to_string() +
                                " is not a face of the fan");
  return it->second;
}

Cone Fan::common_face(int i, int j) const {
  const auto& a = max_cones_.at(i).rays;
  const auto& b = max_cones_.at(j).rays;
  std::vector<int> shared;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(shared));
  return Cone(std::move(shared));
}

}  // namespace torcob
