from .records        import ComparisonRecord, LossRecord, SweepRecord
from .metrics        import gamma_label, delta_percent, rel_loss
from .solve          import solve
from .actual_profit  import actual_profit, unrestricted_profit
from .delta          import delta
from .compare_models import compare_models
from .loss_table     import loss_table
from .sweep          import sweep, PARAMETERS
from .write_csv      import write_csv
