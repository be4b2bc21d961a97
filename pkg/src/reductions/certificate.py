"""
Provenance certificates for reduction outputs.

A certificate records digests of the canonical source and produced texts, the
role of every produced vertex, and the numeric parameters of the construction.
It is written as JSON next to the produced instance; naturals are decimal strings.
"""

import hashlib
import json
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from src.core_model.decimal_text import decimal_to_int, int_to_decimal
from src.core_model.errors import InstanceParseError, InstanceValidationError
from src.core_model.instance_format import serialize_instance
from src.core_model.instances import Instance
from src.core_model.switch_graph import VertexId

_CERTIFICATE_FIELDS = ("reduction", "source_digest", "produced_digest", "parameters", "roles")


def instance_digest(instance: Instance) -> str:
    return "sha256:" + hashlib.sha256(serialize_instance(instance)).hexdigest()


@dataclass(frozen=True)
class ReductionCertificate:
    """
    Attributes:
        reduction: 'digicomp_to_arrival' or 'dagpaths_to_digicomp'
        source_digest: Digest of the source instance's canonical text
        produced_digest: Digest of the produced instance's canonical text
        roles: One role per produced vertex, e.g. 'original:3', 'counter:0',
            'layer:2@1', 'target:5@4', 'F', 'D'
        parameters: Named naturals of the construction
    """

    reduction: str
    source_digest: str
    produced_digest: str
    roles: Tuple[str, ...]
    parameters: Dict[str, int] = field(default_factory=dict)

    def vertices_with_role(self, prefix: str) -> List[VertexId]:
        return [v for v, role in enumerate(self.roles) if role.split(":", 1)[0] == prefix]

    def role_marks(self) -> Dict[VertexId, str]:
        return dict(enumerate(self.roles))

    def to_json(self) -> str:
        payload = {
            "reduction": self.reduction,
            "source_digest": self.source_digest,
            "produced_digest": self.produced_digest,
            "parameters": {k: int_to_decimal(v) for k, v in sorted(self.parameters.items())},
            "roles": list(self.roles),
        }
        return json.dumps(payload, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ReductionCertificate":
        """
        Raises:
            InstanceParseError: text is not JSON
            InstanceValidationError: a field is missing or has the wrong type
        """
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as e:
            raise InstanceParseError(f"certificate is not JSON: {e.msg}", e.lineno, e.colno) from e
        if not isinstance(payload, dict):
            raise InstanceValidationError("certificate must be a JSON object")

        missing = [name for name in _CERTIFICATE_FIELDS if name not in payload]
        if missing:
            raise InstanceValidationError(f"certificate is missing fields: {', '.join(missing)}")
        try:
            roles = payload["roles"]
            parameters = payload["parameters"]
            if not isinstance(roles, list) or not all(isinstance(r, str) for r in roles):
                raise TypeError("roles must be a list of strings")
            certificate = cls(
                reduction=str(payload["reduction"]),
                source_digest=str(payload["source_digest"]),
                produced_digest=str(payload["produced_digest"]),
                roles=tuple(roles),
                parameters={str(k): decimal_to_int(v) for k, v in parameters.items()},
            )
        except (AttributeError, TypeError, ValueError) as e:
            raise InstanceValidationError(f"malformed certificate: {e}") from e
        return certificate


def verify_certificate(
    source: Instance, produced: Instance, certificate: ReductionCertificate
) -> List[str]:
    """
    Check a certificate against the instances it claims to describe.

    Returns:
        List of problems; empty when the certificate is consistent
    """
    problems = []
    if instance_digest(source) != certificate.source_digest:
        problems.append("source digest does not match")
    if instance_digest(produced) != certificate.produced_digest:
        problems.append("produced digest does not match")

    n = produced.n if hasattr(produced, "successors") else produced.graph.n
    if len(certificate.roles) != n:
        problems.append(f"{len(certificate.roles)} roles for {n} produced vertices")
    duplicates = sorted({r for r in certificate.roles if certificate.roles.count(r) > 1})
    if duplicates:
        problems.append(f"roles assigned more than once: {', '.join(duplicates)}")
    declared = certificate.parameters.get("produced_vertices")
    if declared is not None and declared != n:
        problems.append(f"parameters declare {declared} produced vertices, found {n}")
    return problems
