#pragma once

#include "torcob/lattice.hpp"

#include <map>
#include <string>
#include <vector>

namespace torcob {

struct FanError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ray index set of a cone, sorted ascending, 0-based. Cones of a smooth fan
// are determined by their rays, so no generator matrix is stored.
struct Cone {
  std::vector<int> rays;

  Cone() = default;
  explicit Cone(std::vector<int> r);

  int dim() const { return static_cast<int>(rays.size()); }
  bool contains(int ray) const;
  bool is_subset_of(const Cone& other) const;

  bool operator==(const Cone&) const = default;
  auto operator<=>(const Cone&) const = default;

  std::string to_string() const;  // 1-based, e.g. "{1,3}"
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
  void fail(std::string msg);
};

// Lattice data attached to a face: its rays as a partial basis, the canonical
// completion, and the dual characters of the completed basis.
struct OrbitData {
  Cone cone;
  std::vector<LatticeVector> basis;
  std::vector<Character> duals;             // <duals[i], basis[j]> = delta_ij
  std::vector<LatticeVector> completion;
  std::vector<Character> completion_duals;  // vanish on every basis vector
};

class Fan {
 public:
  // Total on in-range data: malformed rays/cones come back as violations in
  // the report, never as exceptions.
  static ValidationReport validate(int rank,
                                   const std::vector<LatticeVector>& rays,
                                   const std::vector<std::vector<int>>& max_cones);

  // Throws FanError listing every violation when validation fails.
  static Fan make(int rank, std::vector<LatticeVector> rays,
                  std::vector<std::vector<int>> max_cones,
                  std::string name = "");

  int rank() const { return rank_; }
  const std::string& name() const { return name_; }
  int num_rays() const { return static_cast<int>(rays_.size()); }
  const std::vector<LatticeVector>& rays() const { return rays_; }
  const LatticeVector& ray(int i) const { return rays_[i]; }
  const std::vector<Cone>& max_cones() const { return max_cones_; }

  const std::vector<Cone>& all_faces() const { return faces_; }
  const std::vector<Cone>& minimal_nonfaces() const { return minimal_nonfaces_; }
  bool is_face(const Cone& c) const;
  const OrbitData& orbit_data(const Cone& face) const;

  // Shared rays of two maximal cones; a face by the fan condition.
  Cone common_face(int i, int j) const;

  // Ridge-count criterion for boundaryless support: every maximal cone is
  // full, every (rank-1)-subset of one lies in exactly two of them.
  bool is_complete() const { return complete_; }

 private:
  Fan() = default;
  void build_caches();

  int rank_ = 0;
  std::string name_;
  std::vector<LatticeVector> rays_;
  std::vector<Cone> max_cones_;
  std::vector<Cone> faces_;
  std::vector<Cone> minimal_nonfaces_;
  std::map<std::vector<int>, OrbitData> orbits_;
  bool complete_ = false;
};

}  // namespace torcob
