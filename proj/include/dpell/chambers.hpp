#pragma once

#include <string>
#include <vector>

#include "dpell/cones.hpp"

namespace dpell {

/// N_i = cone({F_I : i in I, F_I nef} u {H - 2E_i}); defined exactly when the
/// flop of h - e_i exists, i.e. when h - e_i is an extremal Mori curve of t.
RationalCone chamber_Ni(const FibrationType& t, int i);

/// Indices i for which N_i is defined (read off the catalog's Mori curves).
std::vector<int> applicable_chamber_indices(const FibrationType& t);

struct NamedChamber {
    std::string name;
    RationalCone cone;
};

struct SharedFacet {
    std::size_t chamber_a, chamber_b;
    RationalCone facet;
};

struct BoundaryFacet {
    std::size_t chamber;
    RationalCone facet;
};

/// Facet-matching certificate that full-dimensional, interior-disjoint
/// chambers tile a convex target cone.
struct CoverCertificate {
    bool full_dimensional = false;
    bool contained = false;
    bool interior_disjoint = false;
    bool facets_matched = false;
    std::vector<SharedFacet> shared;
    std::vector<BoundaryFacet> boundary;
    bool ok() const {
        return full_dimensional && contained && interior_disjoint && facets_matched;
    }
};

struct ChamberDecomposition {
    std::string type_key;
    std::vector<NamedChamber> chambers;
    RationalCone cover_target; // Mov(X)
    CoverCertificate certificate;
};

/// Verify that the chambers tile `target`; sound for convex targets.
CoverCertificate certify_cover(const std::vector<NamedChamber>& chambers,
                               const RationalCone& target);

/// The Mori chamber decomposition of Mov(X) for the finite Mordell-Weil
/// degree-4 types: the nef cone, the N_i, and their involution pull-backs
/// where the catalog provides the matrix.  The certificate is verified.
ChamberDecomposition mori_chambers(const FibrationType& t);

/// Class of the flop image of a curve meeting the flopped curve k times:
/// gamma + k * c.
CurveClass flop_image(const CurveClass& gamma, const Int& k, const CurveClass& c);

/// Image of a cone under a unimodular matrix (throws unless |det| = 1).
RationalCone apply_matrix(const IntMat& m, const RationalCone& c);

/// Degree-2 X_11 walker.  Chambers of the infinite Mori decomposition are the
/// translates sigma^k(Nef) in the basis B = (H - E_1 - E_2, E_2 - E_1, E_1).
struct X11Walker {
    static IntMat sigma_basis_b();            // the translation matrix in basis B
    static IntMat basis_b_to_standard();      // columns of B in (H, E_1, E_2)
    static IntMat gram_basis_b();             // intersection form pulled to B
    static IntMat sigma_power(long long k);   // sigma^k, any integer k
    /// sigma^k(Nef) computed by matrix power and cross-checked against the
    /// closed-form column matrix; throws on mismatch.
    static RationalCone chamber(long long k);
    /// Closed-form generator columns (k^2+k+1, ...) of sigma^k(Nef).
    static std::vector<Vec> closed_form_columns(long long k);
    static Vec apply_power(long long k, const Vec& v);
};

RationalCone x11_deg2_chamber(long long k);

} // namespace dpell
