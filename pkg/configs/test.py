from configs import default


class Config(default.Config):
    # overwrite config
    subdivision_cap = 60
    metric_trials = 2
    lemma_trials = 2
    invariance_trials = 5
    gonality_max_d = 5
    claim_max_d = 8
