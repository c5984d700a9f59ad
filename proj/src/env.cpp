#include "tanet/env.hpp"

#include <stdexcept>

namespace tanet {

const char* action_name(Action a) {
    switch (a) {
        case Action::Up: return "Up";
        case Action::Down: return "Down";
        case Action::Left: return "Left";
        case Action::Right: return "Right";
        case Action::Stay: return "Stay";
    }
    return "?";
}

Action decode_action(const std::array<bool, 4>& firing) {
    int count = 0;
    std::size_t which = 0;
    for (std::size_t i = 0; i < firing.size(); ++i) {
        if (firing[i]) {
            ++count;
            which = i;
        }
    }
    if (count != 1) return Action::Stay;
    switch (which) {
        case 0: return Action::Up;
        case 1: return Action::Down;
        case 2: return Action::Left;
        default: return Action::Right;
    }
}

GridPhysics tracking_physics() {
    GridPhysics p;
    p.goal_cell = 4;
    p.respawn.fixed = false;
    return p;
}

GridPhysics maze_physics() {
    GridPhysics p;
    p.goal_cell = 1;
    p.blocked = {{3, 0}, {4, 1}};
    p.respawn.fixed = true;
    p.respawn.fixed_cell = 3;
    return p;
}

int move_cell(int cell, Action a, const GridPhysics& physics) {
    if (cell < 0 || cell > 8) throw std::invalid_argument("cell off grid");
    int row = cell / 3, col = cell % 3;
    switch (a) {
        case Action::Up: --row; break;
        case Action::Down: ++row; break;
        case Action::Left: --col; break;
        case Action::Right: ++col; break;
        case Action::Stay: return cell;
    }
    if (row < 0 || row > 2 || col < 0 || col > 2) return cell;  // clipped at the edge
    const int dest = row * 3 + col;
    for (const auto& [a_cell, b_cell] : physics.blocked)
        if ((cell == a_cell && dest == b_cell) || (cell == b_cell && dest == a_cell))
            return cell;  // wall: both directions blocked
    return dest;
}

std::vector<double> encode_observation(int target_cell) {
    if (target_cell < 0 || target_cell > 8)
        throw std::invalid_argument("cell off grid");
    std::vector<double> obs(9, 0.0);
    obs[static_cast<std::size_t>(target_cell)] = 1.0;
    return obs;
}

bool goal_reachable_from_spawns(const GridPhysics& physics) {
    constexpr Action kMoves[] = {Action::Up, Action::Down, Action::Left, Action::Right};
    for (int start = 0; start < 9; ++start) {
        if (start == physics.goal_cell) continue;
        bool seen[9] = {};
        int queue[9], head = 0, tail = 0;
        queue[tail++] = start;
        seen[start] = true;
        bool found = false;
        while (head < tail && !found) {
            const int cell = queue[head++];
            for (Action a : kMoves) {
                const int next = move_cell(cell, a, physics);
                if (next == physics.goal_cell) {
                    found = true;
                    break;
                }
                if (!seen[next]) {
                    seen[next] = true;
                    queue[tail++] = next;
                }
            }
        }
        if (!found) return false;
    }
    return true;
}

GridEnv::GridEnv(GridPhysics physics, Rng& env_rng) : physics_(std::move(physics)) {
    if (!goal_reachable_from_spawns(physics_))
        throw std::invalid_argument("goal unreachable under these physics");
    target_ = respawn(env_rng);
}

int GridEnv::respawn(Rng& env_rng) const {
    if (physics_.respawn.fixed) {
        const int cell = physics_.respawn.fixed_cell;
        if (cell < 0 || cell > 8 || cell == physics_.goal_cell)
            throw std::invalid_argument("bad respawn cell");
        return cell;
    }
    // uniform over the eight non-goal cells
    int pick = static_cast<int>(env_rng.below(8));
    if (pick >= physics_.goal_cell) ++pick;
    return pick;
}

GridEnv::StepResult GridEnv::step(Action a, Rng& env_rng) {
    const int moved = move_cell(target_, a, physics_);
    const bool rewarded = moved == physics_.goal_cell;
    target_ = rewarded ? respawn(env_rng) : moved;
    return StepResult{moved, rewarded};
}

}  // namespace tanet
