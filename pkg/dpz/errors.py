# dpz — exact arithmetic for del Pezzo surfaces and elliptic algebras
# Copyright (C) 2024-2026 Dr Horst Herb
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Affero General Public License for more details.
#
# You should have received a copy of the GNU Affero General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

"""Exception hierarchy shared by every dpz subpackage.

Library code raises :class:`DomainError` when a documented precondition
is violated and :class:`UnsupportedCaseError` for inputs whose answer
needs more than numerical data.  The command-line front end maps both to
exit status 1.
"""

from __future__ import annotations


class DpzError(Exception):
    """Base class for dpz errors."""


class DomainError(DpzError, ValueError):
    """A precondition of an operation does not hold for the given input."""


class UnsupportedCaseError(DomainError):
    """The input lies outside the cases the numerical model decides."""
