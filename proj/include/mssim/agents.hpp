// Agent breeds and per-agent state.

#pragma once

#include <cstdint>

namespace mssim {

enum class Breed : std::uint8_t {
    TregResting = 0,
    TregActive = 1,
    TeffResting = 2,
    TeffActive = 3,
    Virus = 4,
    Cytokine = 5,
};

inline constexpr int kBreedCount = 6;

// Bitmask over breeds for spatial-query filters.
using BreedMask = std::uint8_t;

constexpr BreedMask breed_bit(Breed b) {
    return static_cast<BreedMask>(1U << static_cast<unsigned>(b));
}

inline constexpr BreedMask kMaskTregResting = breed_bit(Breed::TregResting);
inline constexpr BreedMask kMaskTregActive = breed_bit(Breed::TregActive);
inline constexpr BreedMask kMaskTeffResting = breed_bit(Breed::TeffResting);
inline constexpr BreedMask kMaskTeffActive = breed_bit(Breed::TeffActive);
inline constexpr BreedMask kMaskVirus = breed_bit(Breed::Virus);
inline constexpr BreedMask kMaskCytokine = breed_bit(Breed::Cytokine);
inline constexpr BreedMask kMaskTregs = kMaskTregResting | kMaskTregActive;
inline constexpr BreedMask kMaskTeffs = kMaskTeffResting | kMaskTeffActive;
inline constexpr BreedMask kMaskRestingTCells = kMaskTregResting | kMaskTeffResting;
inline constexpr BreedMask kMaskAll = 0x3F;

constexpr bool mask_has(BreedMask m, Breed b) { return (m & breed_bit(b)) != 0; }

/// Cytokines pass through intact barrier patches; everyone else bounces.
constexpr bool bounce_constrained(Breed b) { return b != Breed::Cytokine; }

const char* breed_name(Breed b);

struct Position {
    double x = 0.0;
    double y = 0.0;
    int patch_x() const { return static_cast<int>(x); } // coords are non-negative
    int patch_y() const { return static_cast<int>(y); }
};

struct AgentState {
    std::uint64_t id = 0;
    Breed breed = Breed::TregResting;
    Position pos;
    double heading = 0.0; // degrees, [0, 360)
    double energy = 0.0;
    bool alive = true;
};

} // namespace mssim
