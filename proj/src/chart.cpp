#include "schouten/chart.hpp"

#include <algorithm>
#include <set>

namespace schouten {

struct Chart::Data {
    std::vector<std::string> base, fiber, aux;
    std::optional<std::string> exp;
    std::vector<std::string> all;
    int exp_idx = -1;
};

Chart::Chart() {
    static const std::shared_ptr<const Data> empty = std::make_shared<Data>();
    d_ = empty;
}

Chart Chart::make(std::vector<std::string> base, std::vector<std::string> fiber,
                  std::vector<std::string> aux, std::optional<std::string> exp_coord) {
    auto d = std::make_shared<Data>();
    d->base = std::move(base);
    d->fiber = std::move(fiber);
    d->aux = std::move(aux);
    d->exp = std::move(exp_coord);
    for (const auto& v : {&d->base, &d->fiber, &d->aux})
        d->all.insert(d->all.end(), v->begin(), v->end());
    std::set<std::string> seen;
    for (const auto& n : d->all) {
        if (n.empty())
            throw InputError("empty coordinate name");
        if (!seen.insert(n).second)
            throw InputError("duplicate coordinate name '" + n + "'");
    }
    if (d->exp) {
        if (std::find(d->aux.begin(), d->aux.end(), *d->exp) == d->aux.end())
            throw InputError("exp coordinate '" + *d->exp + "' not among aux coordinates");
        d->exp_idx = int(std::find(d->all.begin(), d->all.end(), *d->exp) - d->all.begin());
    }
    Chart c;
    c.d_ = std::move(d);
    return c;
}

int Chart::coord_count() const { return int(d_->all.size()); }
const std::string& Chart::coord_name(int i) const { return d_->all.at(size_t(i)); }
const std::vector<std::string>& Chart::base_coords() const { return d_->base; }
const std::vector<std::string>& Chart::fiber_coords() const { return d_->fiber; }
const std::vector<std::string>& Chart::aux_coords() const { return d_->aux; }
const std::optional<std::string>& Chart::exp_coord() const { return d_->exp; }

std::optional<int> Chart::find(const std::string& name) const {
    auto it = std::find(d_->all.begin(), d_->all.end(), name);
    if (it == d_->all.end())
        return std::nullopt;
    return int(it - d_->all.begin());
}

int Chart::index_of(const std::string& name) const {
    auto i = find(name);
    if (!i)
        throw InputError("unknown coordinate '" + name + "'");
    return *i;
}

bool Chart::is_fiber_index(int i) const {
    int b = int(d_->base.size());
    return i >= b && i < b + int(d_->fiber.size());
}

std::optional<int> Chart::exp_index() const {
    if (d_->exp_idx < 0)
        return std::nullopt;
    return d_->exp_idx;
}

bool Chart::operator==(const Chart& other) const {
    if (d_ == other.d_)
        return true;
    return d_->base == other.d_->base && d_->fiber == other.d_->fiber &&
           d_->aux == other.d_->aux && d_->exp == other.d_->exp;
}

} // namespace schouten
