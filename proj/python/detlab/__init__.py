# Copyright 2026 The detlab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact verification of multiplicative polynomial-law identities.

Thin wrappers over the native module: inputs are plain dicts mirroring the
JSON file formats of the command-line tool, outputs are parsed report dicts.
"""

import json as _json

from detlab._core import (  # noqa: F401
    DetlabError,
    __version__,
    cfl_factorize,
    epsilon_sign,
    is_lyndon,
)
from detlab import _core


def _dumps(obj):
    return obj if isinstance(obj, str) else _json.dumps(obj)


def charpoly(matrix):
    """Coefficients of det(tI - M) from the leading 1, as strings."""
    return _core.charpoly(_dumps(matrix))


def amitsur(rep, elements, i):
    return _json.loads(_core.amitsur_report(_dumps(rep), list(elements), i))


def pseudochar(rep, d, exhaustive=True, trials=50, seed=42):
    return _json.loads(_core.pseudochar_report(_dumps(rep), d, exhaustive, trials, seed))


def dim2_verify(group, law):
    return _json.loads(_core.dim2_verify_report(_dumps(group), _dumps(law)))


def dim2_deformations(group, base=None):
    return _json.loads(
        _core.dim2_deformations_report(_dumps(group), "" if base is None else _dumps(base))
    )


def odd_locus(c, g, det_plus_one=False):
    return _json.loads(_core.odd_locus_report(_dumps(c), _dumps(g), det_plus_one))


def ch_quotient(rep):
    return _json.loads(_core.ch_quotient_report(_dumps(rep)))


def ch_kernel(rep):
    return _json.loads(_core.ch_kernel_report(_dumps(rep)))


def irreducible(rep, seed=1):
    return _json.loads(_core.irreducible_report(_dumps(rep), seed))


def gamma(group, d, base=None):
    return _json.loads(_core.gamma_report(_dumps(group), d, "" if base is None else _dumps(base)))


def newton(rep, element=-1, order=8):
    return _json.loads(_core.newton_report(_dumps(rep), element, order))


def polarize(rep):
    return _json.loads(_core.polarize_report(_dumps(rep)))


def suite_all(corpus_dir, seed=42, trials=50):
    return _json.loads(_core.suite_all(str(corpus_dir), seed, trials))
