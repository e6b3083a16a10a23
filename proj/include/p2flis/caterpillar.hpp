#pragma once

// Prime caterpillars, grafting, star-graph angles and sides, chain words.

#include <array>
#include <iosfwd>
#include <map>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "p2flis/stargraph.hpp"
#include "p2flis/subtree.hpp"

namespace p2flis {

/// A patch with everything the caterpillar analysis reads from it.
struct Tiling {
  Patch patch;
  P2Graph graph;
  StarsAndSuns flowers;
  StarGraph stars;
  std::vector<int> star_of_tile;  // star-graph vertex of each star dart, else -1
};
Tiling make_tiling(Patch p);

enum class Side : std::uint8_t { Left, Right };
char side_letter(Side s);

/// Tiles of degree >= 2; empty for trees of order <= 2.
InducedSubtree derive(const P2Graph& g, const InducedSubtree& t);
bool is_caterpillar(const P2Graph& g, const InducedSubtree& t);
/// Internal tiles in path order, oriented so the first id is below the last.
/// Throws Error(Invalid) if t is not a caterpillar.
std::vector<int> spine(const P2Graph& g, const InducedSubtree& t);

/// Fully leafed tree with eight internal tiles, all of degree three.
inline constexpr int kPrimeInternal = 8;
inline constexpr int kPrimeOrder = 18;
inline constexpr int kPrimeLeaves = 10;

struct PrimeCaterpillar {
  std::vector<int> chain;  // the internal tiles in path order
  std::vector<int> tiles;  // every tile, ascending
  int class_id = 0;        // 1..6 once classified
  int star = -1;           // own star (star-graph vertex)
  std::array<int, 2> flanks{-1, -1};  // neighbouring stars past chain.front() and chain.back(), -1 if outside
  int angle = 0;           // units of pi/5; 0 until measured
  std::optional<Side> side;
  int majority = 0;        // C'' tiles on the measured side (of 6)
};

/// Canonical signature of a prime's internal tiles (leaf choices ignored).
std::string prime_signature(const Patch& p, std::span<const int> chain);

struct PrimeClass {
  int id = 0;
  int angle = 0;  // expected angle, units of pi/5
  std::string signature;
};
/// The six classes, ids 1..6.
const std::vector<PrimeClass>& prime_catalogue();

/// Throws Error(Invalid) unless t is a prime caterpillar and Error(Structural)
/// if its signature is not in the catalogue.
int classify_prime(const Patch& p, const P2Graph& g, const InducedSubtree& t);
/// Same, from the internal chain alone; 0 when the signature is unknown.
int prime_class_of_chain(const Patch& p, std::span<const int> chain);
PrimeCaterpillar make_prime(const P2Graph& g, const InducedSubtree& t);

/// Union of two fully leafed trees meeting in one shared leaf.  Throws
/// Error(Invalid) on any violated precondition or if the union is not fully leafed.
InducedSubtree graft(const P2Graph& g, const InducedSubtree& a, const InducedSubtree& b, int t);

/// Every prime instance of a patch, classified and measured.
struct PrimeCensus {
  struct Row {
    int class_id = 0;
    int expected_angle = 0;
    std::size_t instances = 0;
    std::size_t unmeasured = 0;           // own star outside the patch
    std::map<int, std::size_t> angles;    // measured angle -> count
    std::array<std::size_t, 2> sides{};   // Left, Right in spine orientation
  };
  std::vector<Row> rows;         // one per catalogue class, by id
  std::size_t unknown = 0;       // signatures outside the catalogue
  std::size_t structural = 0;    // instances whose measurement broke the expected geometry
  std::size_t total = 0;
  /// Instances whose measured angle differs from the catalogue angle.
  std::size_t exceptions() const;
};
PrimeCensus prime_census(const Tiling& tl);

/// Two-prime graftings of a patch grouped by local configuration: the junction
/// tile, the chain end on each side of it, and both own stars.
struct GraftClass {
  std::string signature;
  std::size_t instances = 0;  // unordered pairs of prime instances
  std::array<std::vector<int>, 2> example;  // tiles of the first pair found
  int junction = -1;
};
struct GraftCensus {
  std::vector<GraftClass> classes;  // sorted by signature
  std::size_t primes = 0;           // prime instances examined
  std::size_t unmeasured = 0;       // valid graftings skipped because an own star is outside the patch
};
GraftCensus grafting_configurations(const Tiling& tl);

/// The unique star whose darts touch the chain.  Throws Error(Invalid) if none.
int own_star(const Tiling& tl, std::span<const int> chain);
/// Star-graph neighbour position of `star` closest to `end_tile`: one of the five
/// points s + e with e an edge vector along a dart axis of the star.
Cyclo10 flank_point(const Tiling& tl, int star, int end_tile);

/// Star, flanks, angle and side of an oriented prime chain.  Flanking stars
/// beyond the patch are recorded as -1; the angle is still exact.  Throws
/// Error(Invalid) if the own star is missing and Error(Structural) if the
/// geometry breaks the expected pattern.
void measure_prime(const Tiling& tl, PrimeCaterpillar& pc);
int angle_of(const Tiling& tl, PrimeCaterpillar pc);

struct CaterpillarChain {
  int shape = 0;           // 1 sub-prime, 2 primes + partial, 3 appendix on a shape 1 or 2 caterpillar
  std::vector<int> tiles;  // ascending
  std::vector<PrimeCaterpillar> primes;  // path order
  std::vector<int> junctions;            // junctions[i] is shared by primes i and i+1
  std::vector<int> partial;              // shape 2 remainder, with its graft tile
  std::vector<int> appendix;             // shape 3, with its graft tile
  std::vector<int> star_chain;           // own stars of the primes, filled by analyze_chain
  bool analyzed = false;
};

/// Splits a fully leafed tree into one of the three structures.  Throws
/// Error(Invalid) if t is not fully leafed and Error(Structural) if no structure fits.
CaterpillarChain decompose(const P2Graph& g, const InducedSubtree& t);
/// Classes, stars, flanks, angles and sides of every prime.  Primes whose own
/// star falls outside the patch keep angle 0.
void analyze_chain(const Tiling& tl, CaterpillarChain& c);

/// Sides of the primes along the chain.  Throws Error(Structural) if a prime
/// has no measured side.
std::vector<Side> side_sequence(const CaterpillarChain& c);
bool sides_alternate(std::span<const Side> s);

enum class WordAlphabet { Colors, Angles };
/// Colours of the primes' own stars, or their angles; '?' marks unmeasured angles.
std::string chain_word(const Tiling& tl, const CaterpillarChain& c, WordAlphabet a);
std::string angle_word(const CaterpillarChain& c);

// Sea caterpillars: maximal segments of the angle word matching a catalogue
// template read in either direction.
struct SeaTemplate {
  std::string name;
  std::string angles;  // e.g. "648"
};
const std::vector<SeaTemplate>& sea_catalogue();
std::vector<SeaTemplate> parse_sea_catalogue(const std::string& text);

struct SeaCaterpillar {
  std::string kind;
  int first = 0;  // prime index range [first, last]
  int last = 0;
};
/// Matches are maximal: a template occurrence that sits inside a longer one is
/// not reported.  Residue segments (primes in no match) are reported as "residue".
std::vector<SeaCaterpillar> detect_sea_caterpillars(std::string_view angles,
                                                    const std::vector<SeaTemplate>& catalogue = sea_catalogue());
std::vector<SeaCaterpillar> detect_sea_caterpillars(const CaterpillarChain& c);

enum class PatternKind { ConsecutiveFourFour, ContainsPc1, Cape2, Cape3 };
std::string_view pattern_name(PatternKind k);
struct PatternViolation {
  PatternKind kind;
  int position = 0;  // prime index
  friend bool operator==(const PatternViolation&, const PatternViolation&) = default;
};
std::vector<PatternViolation> forbidden_patterns(std::string_view angles, std::span<const int> classes);
std::vector<PatternViolation> forbidden_patterns(const CaterpillarChain& c);

// CHAIN v1 report.
struct ChainReport {
  int order = 0;
  int shape = 0;
  std::vector<int> tiles;
  struct Prime {
    int class_id = 0;
    int angle = 0;
    std::optional<Side> side;
    friend bool operator==(const Prime&, const Prime&) = default;
  };
  std::vector<Prime> primes;
  std::string colors;
  std::string angles;
  std::vector<std::string> violations;
  friend bool operator==(const ChainReport&, const ChainReport&) = default;
};
ChainReport chain_report(const Tiling& tl, const CaterpillarChain& c);
void write_chain(std::ostream& os, const ChainReport& r);
ChainReport read_chain(std::istream& is);
std::string chain_to_string(const ChainReport& r);
ChainReport chain_from_string(const std::string& text);

}  // namespace p2flis
