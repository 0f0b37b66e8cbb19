"""Finite-group oracle: groups, cyclotomic characters and classical identities."""
from .characters import (CharacterTable, ClassFunction, character_table, conjugate_char, induce, inner,
                         is_irreducible, linear_characters, restrict)
from .cyclotomic import Cyclotomic
from .finite_group import (FiniteGroup, conjugate_subgroup, cosets, cyclic_group, double_cosets_group, is_isomorphic,
                           subgroups)
from .fusion import character_fusion_ring, group_fusion_ring
from .oracle import (check_classical_mackey, check_double_coset_size, check_prop70, check_prop73,
                     check_theorem7_group, exhaustive_oracle, mackey_sum)
