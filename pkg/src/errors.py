"""
Exception types shared by all sausage-lab modules
"""


class SausageLabError(Exception):
    """Base class for every error raised by this package"""


class DomainError(SausageLabError, ValueError):
    """An argument lies outside the mathematical domain of the operation"""


class UnsupportedError(SausageLabError, ValueError):
    """The requested order, body kind or mode is not provided"""


class ReachError(SausageLabError, ValueError):
    """The boundary layer is wider than the reach of the boundary"""


class QuadratureError(SausageLabError, RuntimeError):
    """
    Adaptive quadrature did not reach the requested tolerance

    Attributes:
        value (float): Best value obtained before giving up
        error_estimate (float): Error estimate of that value
        evaluations (int): Number of integrand evaluations spent
    """

    def __init__(self, message, value, error_estimate, evaluations):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate
        self.evaluations = evaluations


class RankDeficiencyError(SausageLabError, ValueError):
    """
    The least-squares design matrix is rank deficient

    Attributes:
        columns (list): Powers j whose basis columns t^(j/2) are dependent
    """

    def __init__(self, message, columns):
        super().__init__(message)
        self.columns = list(columns)


class PartialResultError(SausageLabError, RuntimeError):
    """
    A Monte Carlo run stopped before all replicas completed

    Attributes:
        estimate: MCEstimate built from the completed replicas (None if fewer than one)
        completed (int): Number of completed replicas
    """

    def __init__(self, message, estimate, completed):
        super().__init__(message)
        self.estimate = estimate
        self.completed = completed


class UsageError(SausageLabError, ValueError):
    """Invalid command line, configuration file or environment setting"""
