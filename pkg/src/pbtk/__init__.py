"""Participatory-budgeting toolkit.

Subpackages by preference model:
  core     - shared instances, feasibility, utilities
  egal     - maxmin / minmax solvers for approval ballots
  degrees  - welfare rules when projects have several funding levels
  ordinal  - translation rules, best-representative and share-guarantee rules
  speaked  - single-peaked random rules and entitlement-guarantee checks
  axioms   - transformation harness reproducing the axiom tables
  ioformat - election & parameter files; cli - command-line front end
"""

__version__ = "0.1.0"
