#include "f4r/catalog.hpp"

namespace f4r::catalog {

const std::vector<SkewIngredient>& skew_ingredients() {
    static const std::vector<SkewIngredient> rows = {
        {1, 6, 3, 4, {"w + w^2 X + w^2 X^2 + X^3"}},
        {2,
         30,
         19,
         7,
         {"w^2 X + X^2 + X^4 + w^2 X^6 + X^8 + w^2 X^10 + X^11",
          "w + w^2 X + X^2 + X^4 + w^2 X^6 + X^8 + w^2 X^10 + X^11"}},
        {3, 12, 3, 8, {"w^2 + w X + w X^2 + X^3 + w^2 X^6 + w X^7 + w X^8 + X^9"}},
        {4,
         22,
         11,
         8,
         {"1 + X + w X^2 + w X^3 + X^4 + X^5 + X^6 + X^7 + w^2 X^8 + w^2 X^9 + X^10 + X^11"}},
        {5,
         38,
         19,
         12,
         {"1 + X + w^2 X^2 + w^2 X^3 + w^2 X^6 + w^2 X^7 + w^2 X^8 + w^2 X^9 + w X^10 + w X^11 + w X^12 + "
          "w X^13 + w X^16 + w X^17 + X^18 + X^19",
          "1 + X + w X^2 + w X^3 + w X^6 + w X^7 + w X^8 + w X^9 + w^2 X^10 + w^2 X^11 + w^2 X^12 + "
          "w^2 X^13 + w^2 X^16 + w^2 X^17 + X^18 + X^19"}},
        {6,
         30,
         6,
         18,
         {"w + w X + w^2 X^2 + X^3 + X^5 + w^2 X^6 + w X^7 + X^8 + w^2 X^9 + X^10 + w X^11 + w X^12 + X^14 + "
          "X^15 + w^2 X^16 + w X^17 + X^18 + w^2 X^19 + w^2 X^20 + X^22 + X^23 + X^24"}},
    };
    return rows;
}

const std::vector<CyclicIngredient>& cyclic_ingredients() {
    static const std::vector<CyclicIngredient> rows = {
        {1, 4, 1, 4, "X^3 + X^2 + X + 1"},
        {2, 5, 2, 4, "X^3 + w X^2 + w X + 1"},
        {3, 7, 3, 4, "X^4 + X^2 + X + 1"},
        {4, 15, 11, 4, "X^4 + X^3 + X^2 + w^2 X + w"},
        {5, 17, 13, 4, "X^4 + X^3 + w X^2 + X + 1"},
        {6, 35, 30, 4, "X^5 + w^2 X^4 + w X^2 + w X + 1"},
        {7, 15, 7, 7, "X^8 + X^6 + w X^5 + w X^4 + x^3 + w X^2 + w^2"},
        {8, 17, 9, 7, "X^8 + w X^7 + w X^5 + w X^4 + w X^3 + w X + 1"},
        {9, 19, 10, 7, "X^9 + w X^8 + w X^6 + w X^5 + w^2 X^4 + w^2 X^3 + w^2 X + 1"},
        {10, 35, 24, 7, "X^11 + w X^10 + X^9 + w X^8 + w X^7 + w X^5 + w X^3 + X + 1"},
        {11, 41, 30, 7, "X^11 + w X^10 + w X^7 + w^2 X^6 + w^2 X^5 + w X^4 + w X + 1"},
        {12, 15, 6, 8, "X^9 + w X^8 + X^7 + X^5 + w X^4 + w^2 X^2 + w^2 X + 1"},
        {13, 17, 8, 8, "X^9 + w^2 X^8 + w X^7 + w X^6 + w X^3 + w X^2 + w^2 X + 1"},
        {14, 19, 9, 8, "X^10 + w X^9 + w^2 X^8 + w^2 X^7 + X^5 + w X^3 + w X^2 + w^2 X + 1"},
        {15, 21, 10, 8, "X^11 + w X^10 + X^8 + w^2 X^7 + w X^6 + X^5 + w X^4 + X^3 + w X^2 + X + w"},
        {16, 35, 23, 8, "X^12 + w^2 X^11 + w^2 X^10 + w^2 X^9 + w X^7 + w X^6 + w X^5 + w X^4 + w X^3 + X^2 + 1"},
        {17, 43, 29, 8, "X^14 + w^2 X^13 + w^2 X^12 + X^11 + w^2 X^9 + w X^5 + X^3 + w X^2 + w X + 1"},
        {18, 15, 2, 12,
         "X^13 + w X^12 + w X^11 + X^10 + X^8 + w X^7 + w X^6 + X^5 + X^3 + w X^2 + w X + 1"},
        {19, 17, 4, 12,
         "X^13 + X^12 + w X^11 + X^9 + w X^8 + w^2 X^7 + w^2 X^6 + w X^5 + X^4 + w X^2 + X + 1"},
        {20, 21, 6, 12,
         "X^15 + X^14 + w^2 X^13 + w^2 X^12 + X^11 + w X^10 + X^9 + w^2 X^8 + X^7 + X^6 + X^5 + w X^4 + "
         "w^2 X^3 + w X^2 + wX + 1"},
        {21, 29, 14, 12,
         "X^15 + w^2 X^14 + w X^13 + w X^12 + X^11 + w X^10 + w X^9 + X^8 + X^7 + w X^6 + w X^5 + X^4 + "
         "w X^3 + w X^2 + w^2 X + 1"},
        {22, 37, 18, 12,
         "X^19 + w X^18 + w X^17 + w X^15 + X^13 + w^2 X^12 + w X^11 + w X^10 + w X^9 + w X^8 + w^2 X^7 + "
         "X^6 + w X^4 + w X^2 + w X + 1"},
        {23, 39, 19, 12,
         "X^20 + w^2 X^18 + w^2 X^17 + w X^15 + X^14 + X^12 + X^11 + X^10 + w X^9 + w^2 X^8 + w X^6 + X^5 + "
         "X^3 + w X^2 + w"},
        {24, 43, 14, 18,
         "X^29 + w^2 X^28 + X^27 + w X^24 + w^2 X^23 + X^20 + w^2 X^19 + w X^17 + w^2 X^15 + w X^14 + "
         "w^2 X^12 + w X^10 + X^9 + w X^6 + w^2 X^5 + X^2 + w X + 1"},
    };
    return rows;
}

const std::vector<ProductEntry>& product_entries() {
    static const std::vector<ProductEntry> rows = {
        {1, 16, 7, 4},    {2, 17, 8, 4},    {3, 19, 9, 4},    {4, 27, 17, 4},   {5, 29, 19, 4},
        {6, 47, 36, 4},   {7, 75, 45, 7},   {8, 77, 47, 7},   {9, 79, 48, 7},   {10, 95, 62, 7},
        {11, 101, 68, 7}, {12, 39, 12, 8},  {13, 41, 14, 8},  {14, 43, 15, 8},  {15, 45, 16, 8},
        {16, 59, 29, 8},  {17, 61, 30, 8},  {18, 63, 31, 8},  {19, 65, 32, 8},  {20, 67, 35, 8},
        {21, 79, 45, 8},  {22, 87, 51, 8},  {23, 91, 40, 12}, {24, 93, 42, 12}, {25, 97, 44, 12},
        {26, 105, 52, 12}, {27, 113, 56, 12}, {28, 115, 57, 12}, {29, 103, 26, 18},
    };
    return rows;
}

std::vector<std::string> catalog_notes() {
    std::vector<std::string> notes;
    for (const auto& row : cyclic_ingredients())
        if (row.generator.find('x') != std::string::npos)
            notes.push_back("table 2 row " + std::to_string(row.no) +
                            ": lowercase exponent term normalized to uppercase X");
    for (const auto& row : skew_ingredients())
        for (size_t i = 0; i < row.generators.size(); ++i)
            if (row.generators[i].find('x') != std::string::npos)
                notes.push_back("table 1 row " + std::to_string(row.no) + " generator " + std::to_string(i + 1) +
                                ": lowercase exponent term normalized to uppercase X");
    return notes;
}

std::optional<ProductResolution> resolve_product(const ProductEntry& e) {
    for (const auto& c0 : cyclic_ingredients()) {
        if (c0.d != e.d) continue;
        for (const auto& s : skew_ingredients()) {
            if (s.d != e.d) continue;
            if (c0.n + 2 * s.n == e.n && c0.k + 2 * s.k == e.k) return ProductResolution{c0.no, s.no};
        }
    }
    return std::nullopt;
}

}  // namespace f4r::catalog
