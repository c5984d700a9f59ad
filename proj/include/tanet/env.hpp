#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "tanet/rng.hpp"

namespace tanet {

// 3x3 grid, row-major, cell 0 at top-left:
//   0 1 2
//   3 4 5
//   6 7 8

enum class Action { Up, Down, Left, Right, Stay };

const char* action_name(Action a);

// Motor order is (Up, Down, Left, Right). The decode is all-or-nothing:
// exactly one motor above threshold moves the target; any other firing
// combination leaves it in place, so an untrained net moves usefully only 1
// time in 16 by chance.
Action decode_action(const std::array<bool, 4>& firing);

struct RespawnRule {
    bool fixed = false;
    int fixed_cell = 3;  // used when fixed; otherwise uniform over non-goal cells
};

struct GridPhysics {
    int goal_cell = 4;
    // bidirectional walls between adjacent cells
    std::vector<std::pair<int, int>> blocked;
    RespawnRule respawn;
};

// Target-tracking world: goal at the center, respawn anywhere else.
GridPhysics tracking_physics();

// Barrier maze: goal at top-center, start at mid-left, walls 3-0 and 4-1.
// The only shortest route is 3 -> 4 -> 5 -> 2 -> 1.
GridPhysics maze_physics();

// Raw movement rule: off-grid and blocked moves leave the cell unchanged;
// Stay always does.
int move_cell(int cell, Action a, const GridPhysics& physics);

// One-hot encoding of the target position over the nine input nodes.
std::vector<double> encode_observation(int target_cell);

// True when a breadth-first search reaches the goal from every possible
// spawn cell; environment construction refuses unsolvable physics.
bool goal_reachable_from_spawns(const GridPhysics& physics);

class GridEnv {
public:
    GridEnv(GridPhysics physics, Rng& env_rng);  // spawns the initial target

    struct StepResult {
        int cell_after_move;  // where the move itself put the target
        bool rewarded;        // reached the goal (evaluated before respawn)
    };

    // Applies the action; on reward the target respawns and the stored
    // state is the respawned cell.
    StepResult step(Action a, Rng& env_rng);

    int target_cell() const { return target_; }
    const GridPhysics& physics() const { return physics_; }

private:
    int respawn(Rng& env_rng) const;

    GridPhysics physics_;
    int target_;
};

// Guided XOR presentation: the four input patterns cycle in a fixed order
// regardless of the network's behavior; the only feedback is whether the
// thresholded output matched the truth table.
class XorGuidedTask {
public:
    static constexpr std::array<std::array<double, 2>, 4> kPatterns{
        {{0.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}, {1.0, 1.0}}};
    static constexpr std::array<bool, 4> kTruth{false, true, true, false};

    std::size_t index() const { return index_; }
    const std::array<double, 2>& current() const { return kPatterns[index_]; }
    bool current_truth() const { return kTruth[index_]; }

    // Reward for the response to the current pattern, then advance the cycle.
    bool step(bool output_fired) {
        const bool rewarded = output_fired == kTruth[index_];
        index_ = (index_ + 1) % kPatterns.size();
        return rewarded;
    }

private:
    std::size_t index_ = 0;
};

}  // namespace tanet
