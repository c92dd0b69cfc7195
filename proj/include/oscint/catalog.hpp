#pragma once

#include <functional>
#include <string>
#include <vector>

#include "oscint/integrand.hpp"
#include "oscint/precision.hpp"

namespace oscint {

// One built-in integrand with its closed-form value.
struct CatalogEntry {
    int id = 0;
    Integrand integrand;
    std::function<BigReal(const PrecisionContext&)> reference;
    std::string description;
};

// all eight built-in integrands, ordered by id
const std::vector<CatalogEntry>& catalog_entries();

// entry by id in 1..8; std::out_of_range otherwise
const CatalogEntry& catalog_entry(int id);

// the entry's closed-form value at ctx precision
BigReal reference_value(int id, const PrecisionContext& ctx);

}  // namespace oscint
