#pragma once

#include <stdexcept>
#include <string>

namespace ogwalls {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroVector : Error {
    ZeroVector() : Error("zero Mukai vector has no primitive decomposition") {}
};

struct NotSpherical : Error {
    NotSpherical() : Error("reflection class must have self-pairing -2") {}
};

struct InvalidSurface : Error {
    InvalidSurface() : Error("surface parameter d must be >= 1") {}
};

struct NotRankTwo : Error {
    NotRankTwo() : Error("generators are proportional; span is not rank two") {}
};

struct NotHyperbolic : Error {
    NotHyperbolic() : Error("lattice is not hyperbolic (Gram determinant >= 0)") {}
};

struct VectorNotInLattice : Error {
    VectorNotInLattice() : Error("vector does not lie in the lattice") {}
};

struct DegenerateLattice : Error {
    DegenerateLattice() : Error("lattice pairing is degenerate") {}
};

struct BoundTooLarge : Error {
    BoundTooLarge() : Error("oracle scan bound exceeds 10^6") {}
};

struct NotOGradyType : Error {
    NotOGradyType() : Error("Mukai vector is not of O'Grady type (m=2, v_p^2=2)") {}
};

struct AmbiguousSign : Error {
    AmbiguousSign() : Error("effectivity sign vanishes exactly at the chosen wall point") {}
};

struct WallUnrepresented : Error {
    WallUnrepresented() : Error("wall lattice has no representative curve in the (s,t)-slice") {}
};

struct OddPairing : Error {
    OddPairing() : Error("lattice class pairs oddly with an O'Grady vector") {}
};

struct NotTransverse : Error {
    NotTransverse() : Error("class is proportional to v; orthogonal ray undefined") {}
};

struct UnsupportedVector : Error {
    UnsupportedVector() : Error("vector is not reducible to (2,0,-2) normal form by a line-bundle twist") {}
};

struct CentralChargeVanishes : Error {
    CentralChargeVanishes() : Error("central charge of v vanishes at this slice point") {}
};

struct WindowEmpty : Error {
    WindowEmpty() : Error("slice window is empty") {}
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

} // namespace ogwalls
