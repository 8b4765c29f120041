import logging
from dataclasses import dataclass, field

from surfcalc.surface.bases import BaseRegistry, default_registry
from surfcalc.surface.blowup import blowup_all
from surfcalc.surface.contraction import SingularSurfaceModel, contract
from surfcalc.surface.model import BlowupStep, SurfaceModel


logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class BlowupScript:
    """A base surface, a sequence of blowups and the groups to contract."""

    base: str
    steps: tuple[BlowupStep, ...] = ()
    contract: tuple[tuple[str, ...], ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "steps", tuple(self.steps))
        object.__setattr__(self, "contract", tuple(tuple(g) for g in self.contract))


def build_smooth(script: BlowupScript, registry: BaseRegistry | None = None) -> SurfaceModel:
    """Base lookup followed by every blowup of the script."""
    base = (registry or default_registry).get(script.base)
    return blowup_all(base, script.steps)


def run_script(
    script: BlowupScript, registry: BaseRegistry | None = None
) -> SingularSurfaceModel:
    """Base lookup, blowups and contraction in one go."""
    model = build_smooth(script, registry)
    singular = contract(model, script.contract)
    logger.info(
        f"ran script on {script.base}: {len(script.steps)} blowup(s), "
        f"{len(singular.points)} contracted point(s)"
    )
    return singular
