#ifndef POLYDIAM_HREP_HPP
#define POLYDIAM_HREP_HPP

#include <string>
#include <vector>

#include "polydiam/errors.hpp"
#include "polydiam/rational.hpp"

namespace polydiam {

/**
 * A polyhedron given by n linear inequalities normal_i . x <= offset_i in
 * d variables. Immutable after construction. Construction rejects zero
 * normals and pairs of rows that are positive scalar multiples of each
 * other; parallel rows with genuinely different offsets are allowed (they
 * are merely redundant and are reported downstream, not here).
 */
class HPolyhedron {
  public:
    HPolyhedron(RMatrix normals, RVector offsets, std::vector<std::string> labels = {});

    int dim() const { return static_cast<int>(normals_.cols()); }
    int num_constraints() const { return static_cast<int>(normals_.rows()); }

    const RMatrix& normals() const { return normals_; }
    const RVector& offsets() const { return offsets_; }
    const std::vector<std::string>& labels() const { return labels_; }

    Rational offset(int row) const { return offsets_(row); }
    RVector normal(int row) const { return normals_.row(row).transpose(); }

    /// Exact membership test.
    bool contains(const RVector& x) const;
    /// Exact tightness test for one row.
    bool tight(int row, const RVector& x) const;

    /// A positive-scale-invariant key of one row, used for duplicate detection.
    std::string row_key(int row) const;

  private:
    RMatrix normals_;
    RVector offsets_;
    std::vector<std::string> labels_;
};

/**
 * Affine correspondence between a facet's own (d-1)-dimensional coordinates
 * and the ambient d-dimensional space. The facet equality was solved for
 * coordinate `eliminated`; `lift` restores it, `project` drops it.
 */
struct FacetCoordinateMap {
    int eliminated = 0;
    RVector facet_normal;   // ambient normal of the facet row
    Rational facet_offset;  // ambient offset of the facet row

    RVector lift(const RVector& facet_point) const;
    RVector project(const RVector& ambient_point) const;
};

struct FacetSubpolyhedron {
    HPolyhedron poly;
    FacetCoordinateMap map;
    std::vector<int> row_origin;  // sub-row -> originating ambient row
};

/// Parse the text file format (see serialize_hrep). Errors are ParseError
/// values naming the offending line.
HPolyhedron parse_hrep(const std::string& text);

/**
 * Canonical text form:
 *
 *   H-representation
 *   begin
 *    <n> <d+1> rational
 *    <b_1> <-a_11> ... <-a_1d>
 *    ...
 *   end
 *
 * A row "b -a1 ... -ad" encodes b - a.x >= 0, i.e. a.x <= b. Rationals
 * print canonically, so parse(serialize(P)) == P and serialize(parse(t))
 * is the canonical form of t. Lines before the header starting with '*'
 * are comments; content after "end" is ignored.
 */
std::string serialize_hrep(const HPolyhedron& p);

/**
 * The facet F = P intersect {normal_f . x = offset_f} as a polyhedron in
 * d-1 variables, together with the coordinate map back into the ambient
 * space. The equality is solved for the coordinate with the
 * largest-magnitude coefficient in the facet normal (ties: lowest index)
 * and substituted into every other row. Rows that become trivially true
 * are dropped, rows that become infeasible raise EmptyFacetError, and
 * duplicate rows after substitution merge keeping the first. The result
 * has dimension d-1 and at most n-1 constraints.
 */
FacetSubpolyhedron facet_subpolyhedron(const HPolyhedron& p, int facet);

}  // namespace polydiam

#endif
