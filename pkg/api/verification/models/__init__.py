from .results import SuiteResult
