"""Set up imports when importing homcode module.
"""

from homcode.polygonal_map import polygonal_map, vertex_type
from homcode.gf2 import bit_matrix, rref
from homcode.generators import (odd_family_params, even_family_params,
                                gen_odd, gen_even, builtin)
from homcode.covering import (cover_spec, cut_along, d_cover,
                              find_gluing_cycle)
from homcode.css import (css_code, code_report, build_css, verify_css,
                         encoding_rate, stabilizer_supports, check_matrix)
from homcode.distance import distance, distance_result, unresolved
from homcode.oracle import oracle_distance
from homcode.constants import (budget, distance_method, family, logical,
                               side, table_name)
