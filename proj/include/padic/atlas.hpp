#pragma once

#include <padic/hgde.hpp>

#include <optional>
#include <string>
#include <vector>

namespace padic {

// One row of Takeuchi's classification of arithmetic Fuchsian triangle
// groups: invariant trace field, ramified finite places of the quaternion
// algebra (opaque labels like "2", "v3"; empty = discriminant 1), and the
// triples, sorted.  The full table has 18 rows and 76 triples.
struct TakeuchiRow {
    std::string field;
    std::vector<std::string> disc;
    std::vector<TriangleTriple> triples;
};

struct TakeuchiTable {
    std::vector<TakeuchiRow> rows;
};

// the transcription compiled into the library (source of the data file)
const TakeuchiTable& takeuchi_builtin();

// canonical serialization and its checksum (FNV-1a 64), used for the data
// file integrity check
std::string takeuchi_canonical(const TakeuchiTable& t);
std::string takeuchi_checksum(const TakeuchiTable& t);

// load/save data/takeuchi.json; load validates shape, sortedness,
// hyperbolicity, row/triple counts, and the embedded checksum
TakeuchiTable takeuchi_load(const std::string& path);
void takeuchi_save(const std::string& path, const TakeuchiTable& t);

// lookup up to permutation of the indices
const TakeuchiRow* takeuchi_lookup(const TakeuchiTable& t, const TriangleTriple& tri);

// a triangle group admits an arithmetic p-adic avatar iff its row's
// discriminant contains a place over p (the algebra ramified there can be
// traded against the archimedean conditions); empty for p > 5
std::vector<TriangleTriple> arithmetic_padic_triples(const TakeuchiTable& t, long p);

struct PadicExistence {
    enum class Kind { finite, none, arithmetic_infinite, unknown };
    Kind kind = Kind::unknown;
    std::string group_name;               // spherical case
    std::string field;                    // arithmetic-infinite case
    std::vector<std::string> disc;        // full Takeuchi discriminant
    std::vector<std::string> padic_disc;  // with the places over p removed
};

// spherical -> finite (Schwarz list name); euclidean -> none; hyperbolic with
// p > 5 -> none; hyperbolic with p <= 5 -> arithmetic-infinite when listed in
// the p-table, otherwise unknown
PadicExistence padic_existence(long p, const TriangleTriple& tri, const TakeuchiTable& t);

// chi = 2 - 2 g0 - sum (1 - 1/e_i)
mpq_class orbifold_euler_char(const std::vector<long>& indices, long genus0 = 0);

// genus of a smooth degree-d unramified orbifold cover: 2 - 2g = d chi;
// throws domain_error unless d*chi is an even integer <= 2
long covering_genus(const mpq_class& chi, long degree);

struct GraphOfGroups {
    std::vector<long> vertex_orders;
    std::vector<long> edge_orders;
    std::string note;
};

// sum 1/|vertex| - sum 1/|edge|
mpq_class graph_euler_char(const GraphOfGroups& g);

struct AmalgamData {
    GraphOfGroups graph;
    mpq_class chi;
};

// the single-edge amalgam decompositions of the p-adic (2,4,6) group for
// p in {2,3}; chi = -1/24 in both cases
AmalgamData amalgam_data(long p);

// the two congruence quotient orders 12 and 48 together with the consistency
// relation 12 chi(2,2,3,3) = 48 chi(2,4,6) = 2 - 2g for the genus-3 cover
struct QuotientChain {
    long order_plus = 0;  // index of the level-2 subgroup in the rotation group
    long order_star = 0;  // in the full extended group
    long genus = 0;
};

QuotientChain quotient_chain();

}  // namespace padic
