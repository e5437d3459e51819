#pragma once

#include "schouten/error.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace schouten {

// A coordinate chart: ordered base, fiber and auxiliary coordinate names.
// At most one auxiliary coordinate may be flagged as the exponential
// coordinate t, in which case scalars over the chart may carry integer
// weights k representing a factor e^{k t}. Charts are immutable and cheap
// to copy.
class Chart {
  public:
    Chart(); // empty chart (constants only)
    static Chart make(std::vector<std::string> base,
                      std::vector<std::string> fiber = {},
                      std::vector<std::string> aux = {},
                      std::optional<std::string> exp_coord = std::nullopt);

    int coord_count() const;
    const std::string& coord_name(int i) const;
    const std::vector<std::string>& base_coords() const;
    const std::vector<std::string>& fiber_coords() const;
    const std::vector<std::string>& aux_coords() const;
    const std::optional<std::string>& exp_coord() const;

    std::optional<int> find(const std::string& name) const;
    int index_of(const std::string& name) const; // throws InputError
    bool is_fiber_index(int i) const;
    std::optional<int> exp_index() const;

    bool operator==(const Chart& other) const;
    bool operator!=(const Chart& other) const { return !(*this == other); }

  private:
    struct Data;
    std::shared_ptr<const Data> d_;
};

} // namespace schouten
