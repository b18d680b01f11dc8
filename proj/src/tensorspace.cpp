#include "dhecke/tensorspace.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dhecke {

TensorSpace::TensorSpace(int n, int r, bool enhanced) : n_(n), r_(r), enhanced_(enhanced), dim_(1) {
    if (n < 0 || r < 0) throw std::invalid_argument("TensorSpace: n and r must be non-negative");
    if (letters() < 1) throw std::invalid_argument("TensorSpace: empty alphabet");
    for (int k = 0; k < r; ++k) dim_ *= static_cast<std::size_t>(letters());
}

bool TensorSpace::valid(const MultiIndex& j) const {
    if (static_cast<int>(j.size()) != r_) return false;
    for (int x : j)
        if (x < 1 || x > letters()) return false;
    return true;
}

std::size_t TensorSpace::encode(const MultiIndex& j) const {
    if (!valid(j)) throw std::invalid_argument("TensorSpace::encode: index " + to_string(j) + " out of bounds");
    std::size_t id = 0;
    for (std::size_t k = j.size(); k-- > 0;) id = id * static_cast<std::size_t>(letters()) + static_cast<std::size_t>(j[k] - 1);
    return id;
}

MultiIndex TensorSpace::decode(std::size_t id) const {
    if (id >= dim_) throw std::invalid_argument("TensorSpace::decode: id out of range");
    MultiIndex j(static_cast<std::size_t>(r_));
    for (auto& x : j) {
        x = static_cast<int>(id % static_cast<std::size_t>(letters())) + 1;
        id /= static_cast<std::size_t>(letters());
    }
    return j;
}

std::vector<MultiIndex> TensorSpace::basis() const {
    std::vector<MultiIndex> out;
    out.reserve(dim_);
    for (std::size_t id = 0; id < dim_; ++id) out.push_back(decode(id));
    return out;
}

int rank(const MultiIndex& j, int n) {
    int count = 0;
    for (int x : j)
        if (x <= n) ++count;
    return count;
}

std::vector<int> support(const MultiIndex& j, int n) {
    std::vector<int> out;
    for (std::size_t k = 0; k < j.size(); ++k)
        if (j[k] <= n) out.push_back(static_cast<int>(k) + 1);
    return out;
}

std::vector<MultiIndex> stratum_basis(int n, int r, int l) {
    if (l < 0 || l > r) throw std::invalid_argument("stratum_basis: need 0 <= l <= r");
    std::vector<MultiIndex> out;
    for (auto& j : TensorSpace::enhanced(n, r).basis())
        if (rank(j, n) == l) out.push_back(std::move(j));
    return out;
}

std::vector<MultiIndex> subspace_basis(const std::vector<int>& positions, int n, int r) {
    for (int p : positions)
        if (p < 1 || p > r) throw std::invalid_argument("subspace_basis: position out of range");
    std::vector<MultiIndex> out;
    for (auto& j : TensorSpace::enhanced(n, r).basis())
        if (support(j, n) == positions) out.push_back(std::move(j));
    return out;
}

std::string to_string(const MultiIndex& j) {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < j.size(); ++k) os << (k ? "," : "") << j[k];
    os << ']';
    return os.str();
}

MultiIndex parse_multi_index(const std::string& text) {
    std::string body = text;
    body.erase(std::remove(body.begin(), body.end(), ' '), body.end());
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw std::invalid_argument("basis index must look like [i1,...,ir], got '" + text + "'");
    MultiIndex j;
    std::istringstream in(body.substr(1, body.size() - 2));
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 9)
            throw std::invalid_argument("bad entry '" + item + "' in basis index '" + text + "'");
        j.push_back(std::stoi(item));
    }
    if (!body.empty() && body[body.size() - 2] == ',') throw std::invalid_argument("trailing comma in '" + text + "'");
    return j;
}

SparseOperator<RationalFunction> stratum_projector(const TensorSpace& space, int l) {
    std::vector<std::size_t> ids;
    for (std::size_t id = 0; id < space.dim(); ++id)
        if (rank(space.decode(id), space.n()) == l) ids.push_back(id);
    return coordinate_projector<RationalFunction>(space.dim(), ids, 1);
}

SparseOperator<RationalFunction> subspace_projector(const TensorSpace& space, const std::vector<int>& positions) {
    std::vector<std::size_t> ids;
    for (std::size_t id = 0; id < space.dim(); ++id)
        if (support(space.decode(id), space.n()) == positions) ids.push_back(id);
    return coordinate_projector<RationalFunction>(space.dim(), ids, 1);
}

}  // namespace dhecke
