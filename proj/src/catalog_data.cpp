#include "dpell/catalog.hpp"

namespace dpell {

// Default catalog of del Pezzo elliptic fibration types, degrees 1 through 4.
// Divisor vectors are in the basis (H, E_1, ..., E_d), curve vectors in
// (h, e_1, ..., e_d).  X_20 and X_21 each occur in two geometric variants,
// tagged "a" and "b" in printed-row order.  The same text ships as
// data/catalog.json.
const char* const kDefaultCatalogJson = R"JSON({
  "types": [
    {
      "degree": 1, "name": "X_1", "variant": null,
      "sections": [[0, 1]],
      "verticals": [],
      "zero_section": 0,
      "finite_mw": true,
      "expected_mw": {"rank": 0, "torsion": []},
      "mori_curves": null,
      "involution": null
    },
    {
      "degree": 2, "name": "X_11", "variant": null,
      "sections": [[0, 1, 0], [0, 0, 1]],
      "verticals": [],
      "zero_section": 1,
      "finite_mw": false,
      "expected_mw": {"rank": 1, "torsion": []},
      "mori_curves": null,
      "involution": null
    },
    {
      "degree": 2, "name": "X_SS", "variant": null,
      "sections": [[0, 1, 0], [0, 0, 1]],
      "verticals": [[2, -4, 0], [2, 0, -4]],
      "zero_section": 1,
      "finite_mw": true,
      "expected_mw": {"rank": 0, "torsion": [2]},
      "mori_curves": null,
      "involution": null
    },
    {
      "degree": 2, "name": "X_2", "variant": null,
      "sections": [[0, 0, 1]],
      "verticals": [[0, 1, -1], [1, -2, 0]],
      "zero_section": 0,
      "finite_mw": true,
      "expected_mw": {"rank": 0, "torsion": []},
      "mori_curves": null,
      "involution": null
    },
    {
      "degree": 3, "name": "X_111", "variant": null,
      "sections": [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
      "verticals": [],
      "zero_section": 2,
      "finite_mw": false,
      "expected_mw": {"rank": 2, "torsion": []},
      "mori_curves": null,
      "involution": null
    },
    {
      "degree": 3, "name": "X_S11", "variant": null,
      "sections": [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
      "verticals": [[1, -3, 0, 0], [2, 0, -3, -3]],
      "zero_section": 2,
      "finite_mw": false,
      "expected_mw": {"rank": 1, "torsion": []},
      "mori_curves": null,
      "involution": null
    },
    {
      "degree": 3, "name": "X_SSS", "variant": null,
      "sections": [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
      "verticals": [[1, -3, 0, 0], [1, 0, -3, 0], [1, 0, 0, -3]],
      "zero_section": 2,
      "finite_mw": true,
      "expected_mw": {"rank": 0, "torsion": [3]},
      "mori_curves": null,
      "involution": null
    },
    {
      "degree": 3, "name": "X_12", "variant": null,
      "sections": [[0, 1, 0, 0], [0, 0, 0, 1]],
      "verticals": [[0, 0, 1, -1], [1, -1, -2, 0]],
      "zero_section": 1,
      "finite_mw": false,
      "expected_mw": {"rank": 1, "torsion": []},
      "mori_curves": null,
      "involution": null
    },
    {
      "degree": 3, "name": "X_S2", "variant": null,
      "sections": [[0, 1, 0, 0], [0, 0, 0, 1]],
      "verticals": [[1, -3, 0, 0], [2, 0, -3, -3], [0, 0, 1, -1], [1, -1, -2, 0]],
      "zero_section": 1,
      "finite_mw": true,
      "expected_mw": {"rank": 0, "torsion": [2]},
      "mori_curves": null,
      "involution": null
    },
    {
      "degree": 3, "name": "X_3", "variant": null,
      "sections": [[0, 0, 0, 1]],
      "verticals": [[0, 1, -1, 0], [0, 0, 1, -1], [1, -2, -1, 0]],
      "zero_section": 0,
      "finite_mw": true,
      "expected_mw": {"rank": 0, "torsion": []},
      "mori_curves": null,
      "involution": null
    },
    {
      "degree": 3, "name": "X_S", "variant": null,
      "sections": [[0, 0, 0, 1]],
      "verticals": [[0, 1, -1, 0], [0, 0, 1, -1], [1, -2, -1, 0], [1, -3, 0, 0], [2, 0, -3, -3]],
      "zero_section": 0,
      "finite_mw": true,
      "expected_mw": {"rank": 0, "torsion": []},
      "mori_curves": null,
      "involution": null
    },
    {
      "degree": 4, "name": "X_40", "variant": null,
      "sections": [[0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]],
      "verticals": [],
      "zero_section": 3,
      "finite_mw": false,
      "expected_mw": {"rank": 3, "torsion": []},
      "mori_curves": null,
      "involution": null
    },
    {
      "degree": 4, "name": "X_41", "variant": null,
      "sections": [[0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]],
      "verticals": [[1, -2, -2, 0, 0], [1, 0, 0, -2, -2]],
      "zero_section": 3,
      "finite_mw": false,
      "expected_mw": {"rank": 2, "torsion": []},
      "mori_curves": null,
      "involution": null
    },
    {
      "degree": 4, "name": "X_42", "variant": null,
      "sections": [[0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]],
      "verticals": [[1, -2, -2, 0, 0], [1, 0, 0, -2, -2], [1, -2, 0, -2, 0], [1, 0, -2, 0, -2]],
      "zero_section": 3,
      "finite_mw": false,
      "expected_mw": {"rank": 1, "torsion": [2]},
      "mori_curves": null,
      "involution": null
    },
    {
      "degree": 4, "name": "X_43", "variant": null,
      "sections": [[0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]],
      "verticals": [[1, -2, -2, 0, 0], [1, -2, 0, -2, 0], [1, -2, 0, 0, -2],
                    [1, 0, -2, -2, 0], [1, 0, -2, 0, -2], [1, 0, 0, -2, -2]],
      "zero_section": 3,
      "finite_mw": true,
      "expected_mw": {"rank": 0, "torsion": [2, 2]},
      "mori_curves": [[0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1],
                      [1, -1, 0, 0, 0], [1, 0, -1, 0, 0], [1, 0, 0, -1, 0], [1, 0, 0, 0, -1]],
      "involution": null
    },
    {
      "degree": 4, "name": "X_30", "variant": null,
      "sections": [[0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]],
      "verticals": [[0, 1, -1, 0, 0], [1, -2, 0, -1, -1]],
      "zero_section": 2,
      "finite_mw": false,
      "expected_mw": {"rank": 2, "torsion": []},
      "mori_curves": null,
      "involution": null
    },
    {
      "degree": 4, "name": "X_31", "variant": null,
      "sections": [[0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]],
      "verticals": [[1, -2, -2, 0, 0], [1, 0, 0, -2, -2], [0, 1, -1, 0, 0], [1, -2, 0, -1, -1]],
      "zero_section": 2,
      "finite_mw": false,
      "expected_mw": {"rank": 1, "torsion": []},
      "mori_curves": null,
      "involution": null
    },
    {
      "degree": 4, "name": "X_20", "variant": "a",
      "sections": [[0, 0, 0, 1, 0], [0, 0, 0, 0, 1]],
      "verticals": [[0, 1, 0, -1, 0], [1, -2, -1, 0, -1], [0, 0, 1, 0, -1], [1, -1, -2, -1, 0]],
      "zero_section": 1,
      "finite_mw": false,
      "expected_mw": {"rank": 1, "torsion": []},
      "mori_curves": null,
      "involution": null
    },
    {
      "degree": 4, "name": "X_20", "variant": "b",
      "sections": [[0, 0, 1, 0, 0], [0, 0, 0, 0, 1]],
      "verticals": [[0, 1, 0, -1, 0], [0, 0, 0, 1, -1], [1, -2, -1, -1, 0]],
      "zero_section": 1,
      "finite_mw": false,
      "expected_mw": {"rank": 1, "torsion": []},
      "mori_curves": null,
      "involution": null
    },
    {
      "degree": 4, "name": "X_21", "variant": "a",
      "sections": [[0, 0, 0, 1, 0], [0, 0, 0, 0, 1]],
      "verticals": [[0, 1, 0, -1, 0], [0, 0, 1, 0, -1], [1, -2, 0, -2, 0],
                    [1, 0, -2, 0, -2], [1, -2, -1, 0, -1], [1, -1, -2, -1, 0]],
      "zero_section": 1,
      "finite_mw": true,
      "expected_mw": {"rank": 0, "torsion": [2]},
      "mori_curves": [[0, 0, 0, 1, 0], [0, 0, 0, 0, 1], [1, -1, 0, 0, 0],
                      [1, 0, -1, 0, 0], [0, 1, 0, -1, 0], [0, 0, 1, 0, -1]],
      "involution": [[3, 1, 1, 0, 0], [-4, -2, -1, 0, 0], [-4, -1, -2, 0, 0],
                     [0, 0, 0, 0, 1], [0, 0, 0, 1, 0]]
    },
    {
      "degree": 4, "name": "X_21", "variant": "b",
      "sections": [[0, 0, 0, 1, 0], [0, 0, 0, 0, 1]],
      "verticals": [[0, 1, 0, -1, 0], [0, 0, 1, 0, -1], [1, -2, -1, 0, -1], [1, -1, -2, -1, 0]],
      "zero_section": 1,
      "finite_mw": false,
      "expected_mw": {"rank": 1, "torsion": []},
      "mori_curves": null,
      "involution": null
    },
    {
      "degree": 4, "name": "X_22", "variant": null,
      "sections": [[0, 0, 0, 1, 0], [0, 0, 0, 0, 1]],
      "verticals": [[1, -2, 0, -2, 0], [1, 0, -2, 0, -2], [0, 1, 0, -1, 0],
                    [0, 0, 1, 0, -1], [1, -2, -2, 0, 0]],
      "zero_section": 1,
      "finite_mw": true,
      "expected_mw": {"rank": 0, "torsion": [2]},
      "mori_curves": [[0, 0, 0, 1, 0], [0, 0, 0, 0, 1], [1, -1, 0, 0, 0],
                      [1, 0, -1, 0, 0], [0, 1, 0, -1, 0], [0, 0, 1, 0, -1]],
      "involution": null
    },
    {
      "degree": 4, "name": "X_10", "variant": null,
      "sections": [[0, 0, 0, 0, 1]],
      "verticals": [[0, 1, -1, 0, 0], [0, 0, 1, -1, 0], [0, 0, 0, 1, -1], [1, -2, -1, -1, 0]],
      "zero_section": 0,
      "finite_mw": true,
      "expected_mw": {"rank": 0, "torsion": []},
      "mori_curves": [[1, -1, 0, 0, 0], [0, 0, 0, 0, 1], [0, 1, -1, 0, 0],
                      [0, 0, 1, -1, 0], [0, 0, 0, 1, -1]],
      "involution": [[3, 1, 1, 0, 0], [-4, -1, -2, 0, 0], [-4, -2, -1, 0, 0],
                     [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]]
    },
    {
      "degree": 4, "name": "X_11", "variant": null,
      "sections": [[0, 0, 0, 0, 1]],
      "verticals": [[0, 1, -1, 0, 0], [0, 0, 1, -1, 0], [0, 0, 0, 1, -1], [1, -2, -2, 0, 0]],
      "zero_section": 0,
      "finite_mw": true,
      "expected_mw": {"rank": 0, "torsion": []},
      "mori_curves": [[1, -1, 0, 0, 0], [0, 0, 0, 0, 1], [0, 1, -1, 0, 0],
                      [0, 0, 1, -1, 0], [0, 0, 0, 1, -1]],
      "involution": null
    }
  ]
}
)JSON";

} // namespace dpell
