"""Superspace Verification Server - exact checks of q/h-deformed 3d superspaces over MCP."""

__version__ = "0.1.0"
__author__ = "hocestnonsatis"
__email__ = "anil.oz@icloud.com"

from .server import SuperspaceMCPServer, main
from .engine import VerificationEngine
from .tools import VerificationTools
from .resources import VerificationResources
from .report import VerificationReport

__all__ = [
    "SuperspaceMCPServer",
    "VerificationEngine",
    "VerificationTools",
    "VerificationResources",
    "VerificationReport",
    "main"
]
