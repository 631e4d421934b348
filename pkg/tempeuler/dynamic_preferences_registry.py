#!/usr/bin/env python
# vim: set expandtab tabstop=4 shiftwidth=4:

from dynamic_preferences.types import IntegerPreference, Section
from dynamic_preferences.registries import global_preferences_registry

tempeuler = Section('tempeuler')

@global_preferences_registry.register
class WalkBudget(IntegerPreference):
    section = tempeuler
    name = 'walk_budget'
    default = 24
    verbose_name = 'Exact Walk Solver Edge Budget'
    help_text = 'Largest edge count the exact walk solver will attempt'

@global_preferences_registry.register
class LocalTrailBudget(IntegerPreference):
    section = tempeuler
    name = 'local_trail_budget'
    default = 26
    verbose_name = 'Exact Local Trail Solver Budget'
    help_text = 'Largest edges-times-lifetime product the exact local trail solver will attempt'

@global_preferences_registry.register
class TrailBudget(IntegerPreference):
    section = tempeuler
    name = 'trail_budget'
    default = 26
    verbose_name = 'Exact Trail Solver Edge Budget'
    help_text = 'Largest edge count the exact trail solver will attempt'

@global_preferences_registry.register
class CoverBudget(IntegerPreference):
    section = tempeuler
    name = 'cover_budget'
    default = 22
    verbose_name = 'Two-Trail Cover Edge Budget'
    help_text = 'Largest edge count the two-trail cover search will attempt'

@global_preferences_registry.register
class NodeLimit(IntegerPreference):
    section = tempeuler
    name = 'node_limit'
    default = 2000000
    verbose_name = 'Search Node Limit'
    help_text = 'States an exact search may expand before giving up (0 for no limit)'

@global_preferences_registry.register
class PolyTauLimit(IntegerPreference):
    section = tempeuler
    name = 'poly_tau_limit'
    default = 4
    verbose_name = 'Component Chain Snapshot Limit'
    help_text = 'Most non-empty snapshots for which --method auto uses the component chain solver'

@global_preferences_registry.register
class Threads(IntegerPreference):
    section = tempeuler
    name = 'threads'
    default = 1
    verbose_name = 'Solver Threads'
    help_text = 'Worker threads for the solvers which can split their search'
