#include "hmnc/reference_tables.hpp"

namespace hmnc::reference {

namespace {

// Column order: HMNC, ACC, BACC, MCC, F1, G-mean, Kappa (kTableMetrics).
constexpr std::array<ReferenceTable, 3> kTables = {{
    {"ir0.01",
     1000,
     10,
     0.01,
     {{
         {500, 5, {0.5, 0.5, 0.5, 0.0, 0.66, 0.5, 0.0}},
         {700, 5, {0.5, 0.7, 0.6, 0.04, 0.82, 0.59, 0.01}},
         {700, 7, {0.7, 0.7, 0.7, 0.09, 0.82, 0.7, 0.03}},
         {500, 7, {0.7, 0.5, 0.6, 0.04, 0.67, 0.59, 0.01}},
     }},
     {{
         {1, 2, {0.0, 0.2, 0.1, 0.02, 0.16, 0.09, 0.01}, -1, 0.0},
         {1, 3, {0.2, 0.2, 0.2, 0.04, 0.16, 0.09, 0.01}, 5, 0.2},  // G-mean misprint
         {1, 4, {0.2, 0.0, 0.1, 0.02, 0.0, 0.09, 0.0}, -1, 0.0},
         {2, 3, {0.2, 0.0, 0.1, 0.02, 0.0, 0.11, 0.01}, -1, 0.0},
         {3, 4, {0.0, 0.2, 0.1, 0.02, 0.16, 0.11, 0.01}, -1, 0.0},
     }}},
    {"ir0.1",
     1000,
     100,
     0.1,
     {{
         {500, 50, {0.5, 0.5, 0.5, 0.0, 0.65, 0.5, 0.0}},
         {700, 50, {0.51, 0.68, 0.6, 0.12, 0.8, 0.59, 0.09}},
         {700, 70, {0.7, 0.7, 0.7, 0.24, 0.81, 0.7, 0.18}},
         {500, 70, {0.68, 0.52, 0.6, 0.12, 0.65, 0.59, 0.06}},
     }},
     {{
         {1, 2, {0.01, 0.18, 0.1, 0.06, 0.15, 0.09, 0.05}, -1, 0.0},
         {1, 3, {0.2, 0.2, 0.2, 0.12, 0.16, 0.2, 0.09}, -1, 0.0},
         {1, 4, {0.18, 0.02, 0.1, 0.06, 0.01, 0.09, 0.03}, -1, 0.0},
         {2, 3, {0.19, 0.02, 0.1, 0.06, 0.01, 0.11, 0.04}, -1, 0.0},
         {3, 4, {0.02, 0.18, 0.1, 0.06, 0.16, 0.11, 0.06}, -1, 0.0},
     }}},
    {"ir0.25",
     1000,
     250,
     0.25,
     {{
         {500, 125, {0.5, 0.5, 0.5, 0.0, 0.62, 0.5, 0.0}},
         {700, 125, {0.53, 0.66, 0.6, 0.17, 0.77, 0.59, 0.16}},
         {700, 175, {0.7, 0.7, 0.7, 0.33, 0.79, 0.7, 0.3}},
         {500, 175, {0.65, 0.54, 0.6, 0.16, 0.63, 0.59, 0.12}},
     }},
     {{
         {1, 2, {0.03, 0.16, 0.1, 0.08, 0.15, 0.09, 0.08}, -1, 0.0},
         {1, 3, {0.2, 0.2, 0.2, 0.16, 0.17, 0.2, 0.15}, -1, 0.0},
         {1, 4, {0.15, 0.04, 0.1, 0.08, 0.02, 0.09, 0.06}, -1, 0.0},
         {2, 3, {0.17, 0.04, 0.1, 0.08, 0.02, 0.11, 0.07}, -1, 0.0},
         {3, 4, {0.05, 0.16, 0.1, 0.08, 0.15, 0.11, 0.09}, -1, 0.0},
     }}},
}};

}  // namespace

const std::array<ReferenceTable, 3>& reference_tables() { return kTables; }

}  // namespace hmnc::reference
