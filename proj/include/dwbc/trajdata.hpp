#ifndef DWBC_TRAJDATA_HPP
#define DWBC_TRAJDATA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dwbc {

// =============================================================================
// Trajectories and datasets
// =============================================================================

// Provenance of a trajectory: either original expert data or the output of
// one of the four contamination generators.
enum class Provenance : std::uint8_t {
    clean = 0,
    poisoned_reward = 1,
    poisoned_state = 2,
    poisoned_transition = 3,
    poisoned_action = 4,
};

bool is_poisoned(Provenance tag);
const char* provenance_name(Provenance tag);

// One episode: T+1 states, T actions, T rewards. States and actions are
// flat row-major buffers (step-major, then dimension).
struct Trajectory {
    std::uint64_t id = 0;
    Provenance tag = Provenance::clean;
    std::uint64_t steps = 0;  // T
    std::vector<double> states;   // (T+1) * d_s
    std::vector<double> actions;  // T * d_a
    std::vector<double> rewards;  // T

    const double* state(std::size_t t, std::size_t d_s) const {
        return states.data() + t * d_s;
    }
    const double* action(std::size_t t, std::size_t d_a) const {
        return actions.data() + t * d_a;
    }
    double* state(std::size_t t, std::size_t d_s) {
        return states.data() + t * d_s;
    }
    double* action(std::size_t t, std::size_t d_a) {
        return actions.data() + t * d_a;
    }
};

struct Dataset {
    std::vector<Trajectory> trajectories;
    std::string env_id;
    std::uint64_t seed = 0;
    std::optional<double> alpha_applied;
    std::uint32_t d_s = 0;
    std::uint32_t d_a = 0;
    double a_min = 0.0;
    double a_max = 0.0;

    std::size_t size() const { return trajectories.size(); }
};

struct SplitSpec {
    double ref_fraction = 0.2;
    std::uint64_t seed = 0;
};

// Validates the Trajectory invariants against the dataset dims: length
// chaining, finiteness, action bounds. Throws std::invalid_argument.
void validate_trajectory(const Trajectory& traj, std::uint32_t d_s,
                         std::uint32_t d_a, double a_min, double a_max);

// Validates all trajectories plus dataset-level invariants (unique ids).
void validate_dataset(const Dataset& data);

// Bit-exact comparison, including float bit patterns and all metadata.
bool datasets_equal(const Dataset& a, const Dataset& b);
bool trajectories_equal(const Trajectory& a, const Trajectory& b);

// Splits into (reference, main) by a seeded permutation. The reference side
// gets round(ref_fraction * N) trajectories; ids are preserved, so the two
// sides partition the input. Throws if the dataset has fewer than two
// trajectories or either side would be empty.
std::pair<Dataset, Dataset> split_reference(const Dataset& data,
                                            const SplitSpec& spec);

// Concatenation for building experiment mixtures: a's trajectories then
// b's, ids reassigned 0..N-1. alpha_applied is recomputed from provenance
// tags. Dims and action bounds must match.
Dataset concat(const Dataset& a, const Dataset& b);

// Binary dataset file format (see docs/formats.md). Round-trips bit-exactly.
void save_dataset(const Dataset& data, const std::string& path);
Dataset load_dataset(const std::string& path);

}  // namespace dwbc

#endif  // DWBC_TRAJDATA_HPP
