#pragma once

#include "crystals/crystal.hpp"

namespace crystals {

// Ground-state data of the path realization: the sequences lambda_k =
// sigma^k(lambda) and bbar_k = b(sigma^{k-1} lambda).
class PathSpace {
  public:
    PathSpace(const FiniteCrystal& B, Weight lambda);

    const FiniteCrystal& crystal() const { return *B_; }
    const Weight& lambda() const { return lambda_; }

    Weight lambda_k(int k) const;                // sigma^k lambda, k >= 0
    FiniteCrystal::Elem bbar(int k) const;       // b(lambda_{k-1}), k >= 1

  private:
    const FiniteCrystal* B_;
    Weight lambda_;
};

// A semi-infinite path truncated to a finite window (p(N),...,p(1)) with
// p(j) = bbar_j for j > N.  Normal form stores the smallest such N.
struct Path {
    std::vector<FiniteCrystal::Elem> window;  // window[0] = p(N), back = p(1)

    int size() const { return static_cast<int>(window.size()); }
    friend bool operator==(const Path&, const Path&) = default;
    friend auto operator<=>(const Path&, const Path&) = default;
};

Path ground_state_path(const PathSpace& spec);

// Strip leading ground-state components so the window is minimal.
Path normalize_path(const PathSpace& spec, Path p);

// Extend the window to at least N components.
Path widen_path(const PathSpace& spec, Path p, int N);

// e_i / f_i on paths via the signature rule with the u_{lambda_N} block;
// the window grows by `growth` and retries when f selects the block.
std::optional<Path> path_apply(const PathSpace& spec, char op, int i, const Path& p,
                               int growth = 1);

std::pair<int, int> path_eps_phi(const PathSpace& spec, int i, const Path& p);

// Classical weight of the path: lambda_N + sum of component weights.
Weight path_weight(const PathSpace& spec, const Path& p);

std::string path_to_string(const PathSpace& spec, const Path& p);
std::string path_to_json(const PathSpace& spec, const Path& p);

}  // namespace crystals
