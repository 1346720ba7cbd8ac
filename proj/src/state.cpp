#include "mssim/state.hpp"

#include <algorithm>

namespace mssim {

const char* breed_name(Breed b) {
    switch (b) {
        case Breed::TregResting: return "treg_rest";
        case Breed::TregActive: return "treg_act";
        case Breed::TeffResting: return "teff_rest";
        case Breed::TeffActive: return "teff_act";
        case Breed::Virus: return "virus";
        case Breed::Cytokine: return "cytokine";
    }
    return "?";
}

std::uint64_t WorldState::spawn(Breed breed, Position pos, double heading, double energy) {
    AgentState a;
    a.id = next_agent_id++;
    a.breed = breed;
    a.pos = pos;
    a.heading = heading;
    a.energy = energy;
    agents.push_back(a);
    ++patch_occupancy[Grid::patch_index(pos.patch_x(), pos.patch_y())];
    ++breed_counts[static_cast<int>(breed)];
    return a.id;
}

void WorldState::kill(std::uint32_t index) {
    AgentState& a = agents[index];
    if (!a.alive) return;
    a.alive = false;
    --patch_occupancy[Grid::patch_index(a.pos.patch_x(), a.pos.patch_y())];
    --breed_counts[static_cast<int>(a.breed)];
}

void WorldState::set_position(std::uint32_t index, Position pos) {
    AgentState& a = agents[index];
    --patch_occupancy[Grid::patch_index(a.pos.patch_x(), a.pos.patch_y())];
    a.pos = pos;
    ++patch_occupancy[Grid::patch_index(pos.patch_x(), pos.patch_y())];
}

void WorldState::transition(std::uint32_t index, Breed to) {
    AgentState& a = agents[index];
    --breed_counts[static_cast<int>(a.breed)];
    a.breed = to;
    ++breed_counts[static_cast<int>(to)];
}

void WorldState::compact() {
    std::erase_if(agents, [](const AgentState& a) { return !a.alive; });
}

int WorldState::live_agents() const {
    int n = 0;
    for (const auto& a : agents)
        if (a.alive) ++n;
    return n;
}

} // namespace mssim
