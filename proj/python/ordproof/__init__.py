# Copyright 2026 The ordproof Authors. All Rights Reserved.
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
# ==============================================================================

from ordproof._ordproof import (
    BudgetError,
    ExtractionError,
    Ordinal,
    OrdinalError,
    ProofError,
    SexpError,
    StepDownError,
    extract,
    fgh_cmp,
    fgh_eval,
    inf_metrics,
    proof_check,
    proof_metrics,
    sd_verify,
)

__all__ = [
    "BudgetError",
    "ExtractionError",
    "Ordinal",
    "OrdinalError",
    "ProofError",
    "SexpError",
    "StepDownError",
    "extract",
    "fgh_cmp",
    "fgh_eval",
    "inf_metrics",
    "proof_check",
    "proof_metrics",
    "sd_verify",
]
