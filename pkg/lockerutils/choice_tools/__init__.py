from .decisions            import LocationDecision, RestrictionDecision
from .decisions            import ChoiceDistribution, ProfitBreakdown
from .dominance            import dominates, dominated_set, nondominated_set, antichain_violation
from .choice_probabilities import choice_probabilities, check_antichains
from .profit               import profit
from .restriction          import full_nondominated_restriction
