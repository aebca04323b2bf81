"""Finite-scale constructions on sparse lp/c0 models.

Thin Python wrapper over the compiled ``_lpkern`` extension: exact-rational
sparse families, disjoint-support partitioning, explicit operator builders
(dense-image, kernel-via-duality, kernel-via-quotient), biorthogonal systems,
and exact verification oracles.
"""

try:
    from lpkern import _lpkern  # installed layout: extension inside the package
except ImportError:  # build-tree layout: extension on sys.path
    import _lpkern

Family = _lpkern.Family
Space = _lpkern.Space
annihilator = _lpkern.annihilator
check_duality_chain = _lpkern.check_duality_chain
check_lemma25_roundtrip = _lpkern.check_lemma25_roundtrip
dense_image_operator_json = _lpkern.dense_image_operator_json
family_from_jsonl = _lpkern.family_from_jsonl
family_to_jsonl = _lpkern.family_to_jsonl
generate = _lpkern.generate
kernel_certified = _lpkern.kernel_certified
kernel_via_duality_json = _lpkern.kernel_via_duality_json
kernel_via_quotient_json = _lpkern.kernel_via_quotient_json
markushevich = _lpkern.markushevich
operator_rank = _lpkern.operator_rank
partition = _lpkern.partition
pre_annihilator = _lpkern.pre_annihilator

__all__ = [
    "Family",
    "Space",
    "annihilator",
    "check_duality_chain",
    "check_lemma25_roundtrip",
    "dense_image_operator_json",
    "family_from_jsonl",
    "family_to_jsonl",
    "generate",
    "kernel_certified",
    "kernel_via_duality_json",
    "kernel_via_quotient_json",
    "markushevich",
    "operator_rank",
    "partition",
    "pre_annihilator",
]
