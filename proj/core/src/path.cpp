#include "crystals/path.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "crystals/signature.hpp"

namespace crystals {

PathSpace::PathSpace(const FiniteCrystal& B, Weight lambda) : B_(&B), lambda_(std::move(lambda)) {
    if (static_cast<int>(lambda_.size()) != B.index_count())
        throw std::invalid_argument("weight length does not match index set");
    if (!is_dominant(lambda_)) throw std::invalid_argument("highest weight must be dominant");
}

Weight PathSpace::lambda_k(int k) const {
    Weight w = lambda_;
    for (int t = 0; t < k; ++t) w = B_->sigma(w);
    return w;
}

FiniteCrystal::Elem PathSpace::bbar(int k) const { return B_->minimal(lambda_k(k - 1)); }

Path ground_state_path(const PathSpace&) { return Path{}; }

Path normalize_path(const PathSpace& spec, Path p) {
    std::size_t drop = 0;
    int N = p.size();
    while (drop < p.window.size() && p.window[drop] == spec.bbar(N - static_cast<int>(drop)))
        ++drop;
    p.window.erase(p.window.begin(), p.window.begin() + drop);
    return p;
}

Path widen_path(const PathSpace& spec, Path p, int N) {
    while (p.size() < N) p.window.insert(p.window.begin(), spec.bbar(p.size() + 1));
    return p;
}

namespace {
int pairing(const Weight& w, int i) { return w[i]; }
}  // namespace

std::optional<Path> path_apply(const PathSpace& spec, char op, int i, const Path& p,
                               int growth) {
    if (growth < 1) throw std::invalid_argument("growth must be positive");
    const FiniteCrystal& B = spec.crystal();
    Path cur = p;
    for (;;) {
        const int N = cur.size();
        const int block = pairing(spec.lambda_k(N), i);
        auto pos = (op == 'f') ? f_position(B, i, cur.window, block)
                               : e_position(B, i, cur.window, block);
        if (!pos) return std::nullopt;
        if (*pos == N + 1) {
            // The action lands in the hidden ground-state tail; reveal more of
            // it and retry.
            cur = widen_path(spec, std::move(cur), N + growth);
            continue;
        }
        auto& slot = cur.window[N - *pos];
        auto r = (op == 'f') ? B.f(i, slot) : B.e(i, slot);
        if (!r) throw std::logic_error("signature selected an undefined component action");
        slot = *r;
        return normalize_path(spec, std::move(cur));
    }
}

std::pair<int, int> path_eps_phi(const PathSpace& spec, int i, const Path& p) {
    const FiniteCrystal& B = spec.crystal();
    const int block = pairing(spec.lambda_k(p.size()), i);
    Signature s = reduce_signature(tensor_signature(B, i, p.window, block));
    int minus = 0;
    for (const auto& entry : s) minus += entry.plus ? 0 : 1;
    return {minus, static_cast<int>(s.size()) - minus};
}

Weight path_weight(const PathSpace& spec, const Path& p) {
    Weight w = spec.lambda_k(p.size());
    for (const auto& b : p.window) w = add(w, spec.crystal().weight(b));
    return w;
}

std::string path_to_string(const PathSpace& spec, const Path& p) {
    std::ostringstream os;
    os << "...";
    for (const auto& b : p.window) os << "(x)" << spec.crystal().encode(b);
    return os.str();
}

std::string path_to_json(const PathSpace& spec, const Path& p) {
    nlohmann::json j;
    j["lambda"] = spec.lambda();
    j["N"] = p.size();
    j["window"] = nlohmann::json::array();
    for (const auto& b : p.window) j["window"].push_back(spec.crystal().encode(b));
    return j.dump();
}

}  // namespace crystals
