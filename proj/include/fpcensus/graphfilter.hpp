#pragma once

#include <array>
#include <vector>

#include "fpcensus/multigraph.hpp"

namespace fpc {

// A maximal run of double edges v[0] = v[1] = ... = v[k] with a loop on
// v[0]. When v[k] also carries a loop the chain is double-ended and makes up
// the whole graph. For a one-ended chain, `exits` holds the two distinct
// vertices outside the chain that the end v[k] is joined to.
struct Chain {
    std::vector<int> vertices;
    bool capped_front = true;
    bool capped_back = false;
    std::array<int, 2> exits{-1, -1};

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    int end() const { return vertices.back(); }
    bool one_ended() const { return capped_front && !capped_back; }
};

struct ChainSet {
    std::vector<Chain> chains;

    // Indices into `chains` of the one-ended chains.
    std::vector<int> one_ended() const;
};

struct FilterVerdict {
    bool eliminated_old = false;
    bool eliminated_straybigon = false;
    bool eliminated_square = false;
    bool eliminated_mountains = false;
    bool kept = true;

    bool eliminated_new() const {
        return eliminated_straybigon || eliminated_square || eliminated_mountains;
    }
};

ChainSet find_chains(const Multigraph& g);

// Triple edge; chain end joined to both ends of a double edge; two chain ends
// joined by a single edge.
bool eliminated_by_old(const Multigraph& g, const ChainSet& chains);

// A chain end V1 joined to V2 where V2 = V3 is a double edge off the chain,
// with none of the permitted resolutions through V1's other neighbour V4.
bool eliminated_by_straybigon(const Multigraph& g, const ChainSet& chains);

// Adjacent U, V each joined to the ends of two distinct one-ended chains.
bool eliminated_by_square(const Multigraph& g, const ChainSet& chains);

// U, V each joined to the ends of three distinct one-ended chains.
bool eliminated_by_mountains(const Multigraph& g, const ChainSet& chains);

// All four flags, computed independently.
FilterVerdict filter_verdict(const Multigraph& g);

}  // namespace fpc
