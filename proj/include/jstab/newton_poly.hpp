#pragma once

#include "jstab/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace jstab {

struct Generator {
    RVec exp;
    long t = 0;
};

struct MonomialFlagIdeal {
    int k = 0;
    std::vector<Generator> gens;
    std::vector<RVec> rays;  // exponent-space cone generators; empty = orthant
};

struct ConicalPolyhedron {
    int k = 0;
    std::vector<RVec> vertices;  // length k+1, last coordinate is t
    std::vector<RVec> rays;      // length k+1
};

struct LocalChain {
    long r = 0;
    std::vector<RVec> levels;  // D_0 .. D_{r-1}
    Integer l = 1;
};

std::vector<RVec> exponent_rays(const MonomialFlagIdeal& a);
void validate(const MonomialFlagIdeal& a);
// shifts t so that some generator has t-order 0; returns the shift
long translate(MonomialFlagIdeal& a);

ConicalPolyhedron newton_polyhedron(const MonomialFlagIdeal& a);
bool contains(const ConicalPolyhedron& P, const RVec& point);
long t_length(const ConicalPolyhedron& P);
std::vector<RVec> slice_vertices(const ConicalPolyhedron& P, const Rational& m);

struct FaceComplex {
    std::vector<std::vector<int>> maximal_faces;  // vertex indices into P.vertices
    std::vector<int> face_dims;
    int dim = 0;  // dimension of the union F
};

FaceComplex bounded_faces(const ConicalPolyhedron& P);

struct StarReport {
    bool ok = false;
    bool almost_trivial = false;
    int dim_F = 0;
    LocalChain chain;
    long failed_slice = -1;
    std::vector<RVec> slice_points;  // F ∩ {t = failed_slice}
    std::vector<int> bad_face;
    std::string reason;
};

StarReport condition_star_check(const MonomialFlagIdeal& a);

struct RescaleResult {
    Integer l = 1;
    MonomialFlagIdeal scaled;
};

RescaleResult minimal_rescale(const MonomialFlagIdeal& a);

struct Chart {
    RVec interior;                 // a functional inside the cone
    std::vector<RVec> inequalities;  // cone = {n : n·v ≥ 0} beyond the exponent dual cone
    LocalChain chain;
    std::vector<int> selected;       // index of the chosen vertex in each slice
    bool monotone = false;
    bool one_dimensional = false;
};

std::vector<Chart> fan_resolve(const MonomialFlagIdeal& a);
// argmin of n over each slice, ties broken lexicographically
LocalChain select_chain(const MonomialFlagIdeal& a, const RVec& n);

MonomialFlagIdeal chain_ideal(const LocalChain& chain, int k);
std::vector<Generator> power_oracle(const MonomialFlagIdeal& a, int m, std::size_t cap = 200000);
bool star_power_check(const LocalChain& chain, int k, int m, std::size_t cap = 200000);
// one generator per level 0..r-1 plus (0, r), read as a chain; throws if the ideal has another shape
LocalChain chain_from_generators(const MonomialFlagIdeal& a);
bool same_monomial_ideal(const std::vector<Generator>& a, const std::vector<Generator>& b);
std::vector<Generator> minimal_generators(std::vector<Generator> gens);

}  // namespace jstab
