"""Exception types shared across the package."""


class ParcylError(Exception):
    """Base class for all package errors."""


class CutError(ParcylError):
    """Argument lies on (or too close to) a branch cut."""


class TraceStalled(ParcylError):
    """Level-curve tracer step collapsed near a singularity."""


class NoPath(ParcylError):
    """No monotone progressive path exists for the requested point."""


class DomainError(ParcylError):
    """Point outside the validity domain of the requested expansion."""


class OrderError(ParcylError):
    """Requested order not available or violates a convergence constraint."""


class TurningPointError(ParcylError):
    """Operation undefined this close to a turning point."""


class ConsistencyError(ParcylError):
    """An exact identity failed during generation; indicates a bug."""


class PoleError(ParcylError):
    """Connection constant undefined at this parameter value."""


class PairError(ParcylError):
    """Requested (j, k) recession pair has an empty validity domain."""


class AccuracyError(ParcylError):
    """Oracle could not certify the requested accuracy."""


class StiffnessError(ParcylError):
    """ODE integrator step size collapsed."""
