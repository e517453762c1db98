#pragma once

#include <optional>
#include <string>
#include <vector>

namespace f4r::catalog {

// Built-in reference catalog of known good codes, used by the verification
// harness. Generator strings are kept verbatim as published (including one
// lowercase exponent, which the loader normalizes and reports).

// Table 1: F4 skew cyclic ingredient codes. Rows with two generators give
// separate generators for the two ingredient positions of the product
// construction.
struct SkewIngredient {
    int no;
    int n, k, d;
    std::vector<std::string> generators;
};

// Table 2: F4 cyclic ingredient codes.
struct CyclicIngredient {
    int no;
    int n, k, d;
    std::string generator;
};

// Table 3: Gray-image product codes [n, k, d] built from one cyclic
// ingredient and a pair of equal-length skew ingredients with the same
// minimum distance.
struct ProductEntry {
    int no;
    int n, k, d;
};

const std::vector<SkewIngredient>& skew_ingredients();
const std::vector<CyclicIngredient>& cyclic_ingredients();
const std::vector<ProductEntry>& product_entries();

// Stable notes about transcription normalizations applied when parsing the
// verbatim generator strings (e.g. lowercase 'x').
std::vector<std::string> catalog_notes();

// Ingredient resolution for a product entry: the unique (cyclic row, skew
// row) pair with matching distance whose lengths and dimensions produce the
// entry, scanning rows in catalog order.
struct ProductResolution {
    int cyclic_no;
    int skew_no;
};
std::optional<ProductResolution> resolve_product(const ProductEntry& e);

}  // namespace f4r::catalog
