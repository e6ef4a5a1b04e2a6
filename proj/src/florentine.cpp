#include "fitsim/graph.hpp"

#include <array>

namespace fitsim {

namespace {

// Marriage ties between the fifteen connected families (the historical
// dataset also lists an isolated sixteenth family, which is omitted so the
// network is connected). Indices follow the alphabetical name order below.
constexpr std::array<std::string_view, 15> kFamilyNames = {
    "Acciaiuoli", "Albizzi",  "Barbadori",    "Bischeri", "Castellani",
    "Ginori",     "Guadagni", "Lamberteschi", "Medici",   "Pazzi",
    "Peruzzi",    "Ridolfi",  "Salviati",     "Strozzi",  "Tornabuoni",
};

constexpr std::array<Edge, 20> kMarriageTies = {{
    {0, 8},   // Acciaiuoli  - Medici
    {1, 5},   // Albizzi     - Ginori
    {1, 6},   // Albizzi     - Guadagni
    {1, 8},   // Albizzi     - Medici
    {2, 4},   // Barbadori   - Castellani
    {2, 8},   // Barbadori   - Medici
    {3, 6},   // Bischeri    - Guadagni
    {3, 10},  // Bischeri    - Peruzzi
    {3, 13},  // Bischeri    - Strozzi
    {4, 10},  // Castellani  - Peruzzi
    {4, 13},  // Castellani  - Strozzi
    {6, 7},   // Guadagni    - Lamberteschi
    {6, 14},  // Guadagni    - Tornabuoni
    {8, 11},  // Medici      - Ridolfi
    {8, 12},  // Medici      - Salviati
    {8, 14},  // Medici      - Tornabuoni
    {9, 12},  // Pazzi       - Salviati
    {10, 13}, // Peruzzi     - Strozzi
    {11, 13}, // Ridolfi     - Strozzi
    {11, 14}, // Ridolfi     - Tornabuoni
}};

} // namespace

Graph florentine_families() {
    static const Graph g = Graph::from_edge_list(
        std::span<const Edge>(kMarriageTies.data(), kMarriageTies.size()),
        static_cast<NodeId>(kFamilyNames.size()));
    return g;
}

std::span<const std::string_view> florentine_family_names() {
    return {kFamilyNames.data(), kFamilyNames.size()};
}

} // namespace fitsim
