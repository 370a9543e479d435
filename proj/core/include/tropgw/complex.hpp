#pragma once

#include "tropgw/polytope.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tropgw {

using FaceId = std::string;

struct Face {
    FaceId id;
    IntegralAffinePolytope polytope;
    /// Real dimension of the exploded chart over this face (metadata used by
    /// evaluation-space dimension bookkeeping).
    std::size_t chart_real_dim = 0;
};

/// An embedded complex of integral-affine polytopes in one ambient R^N,
/// with an explicit face-of relation.
class PolyhedralComplex {
  public:
    /// Validates the face-of pairs geometrically and the complex condition.
    /// Throws Validation on failure.
    PolyhedralComplex(std::size_t ambient_dim, std::vector<Face> faces,
                      std::vector<std::pair<FaceId, FaceId>> incidence);

    std::size_t ambient_dim() const noexcept { return dim_; }
    const std::vector<Face> &faces() const noexcept { return faces_; }
    /// Declared (sub, super) pairs, in input order.
    const std::vector<std::pair<FaceId, FaceId>> &incidence() const noexcept { return incidence_; }

    bool has_face(const FaceId &id) const { return index_.contains(id); }
    const Face &face(const FaceId &id) const;
    std::size_t face_dimension(const FaceId &id) const;

    /// Proper face relation, transitively closed.
    bool is_proper_face(const FaceId &sub, const FaceId &super) const;
    /// All proper faces of `id` in declaration order.
    std::vector<FaceId> faces_of(const FaceId &id) const;
    /// Faces that are not a proper face of anything.
    bool is_maximal(const FaceId &id) const;

    std::vector<FaceId> faces_containing(const RationalPoint &p) const;
    bool contains(const RationalPoint &p) const;
    /// Lowest-dimensional face containing p; throws OutsideComplex.
    const Face &minimal_face_containing(const RationalPoint &p) const;

  private:
    std::size_t dim_;
    std::vector<Face> faces_;
    std::vector<std::pair<FaceId, FaceId>> incidence_;
    std::map<FaceId, std::size_t> index_;
    std::vector<std::size_t> dims_;
    std::vector<std::vector<bool>> below_; // below_[a][b]: a is a proper face of b
};

/// Geometric check that `sub` is a proper face of `super`.
bool is_geometric_face(const IntegralAffinePolytope &sub, const IntegralAffinePolytope &super);

/// Dimension of the affine hull.
std::size_t polytope_dimension(const IntegralAffinePolytope &p);

/// Constraints that vanish on all of p.
std::vector<std::size_t> implicit_equalities(const IntegralAffinePolytope &p);

/// A point where only the implicit equalities are active.
RationalPoint relative_interior_point(const IntegralAffinePolytope &p);

/// Tropical completion of a face: its tangent cone at a relative-interior point.
IntegralAffinePolytope completion(const IntegralAffinePolytope &p);

/// The singular fiber's components and which of them meet.
struct NCDegenerationDescription {
    std::vector<std::string> components;
    std::vector<std::vector<std::string>> intersections;
};

/// Dual complex of simplices: vertex i at the i-th unit point of R^{#components},
/// one standard simplex per declared intersection. Face ids join component names with '+'.
PolyhedralComplex dual_complex(const NCDegenerationDescription &d, std::size_t chart_real_dim);

struct StratumLocation {
    FaceId face;
    std::vector<std::size_t> active; ///< active constraints of that face at the point
    std::size_t dimension = 0;
};

StratumLocation stratum_containing(const PolyhedralComplex &c, const RationalPoint &p);

struct FanCone {
    FaceId face;
    IntegralAffinePolytope cone;
};

/// Cones with apex at the origin.
class Fan {
  public:
    Fan(std::size_t ambient_dim, std::vector<FanCone> cones);

    std::size_t ambient_dim() const noexcept { return dim_; }
    const std::vector<FanCone> &cones() const noexcept { return cones_; }
    /// Whether the ray R_{>=0} v lies in some cone.
    bool contains_direction(const IntegralVector &v) const;

  private:
    std::size_t dim_;
    std::vector<FanCone> cones_;
};

/// Tropical part of the tropical completion at p: one cone per face containing p.
Fan tangent_cone(const PolyhedralComplex &c, const RationalPoint &p);

/// The closed face and all of its faces.
PolyhedralComplex closure_of_stratum(const PolyhedralComplex &c, const FaceId &face);

} // namespace tropgw
