class Config:
    # settings that affect the metric experiments
    subdivision_cap = 200  # largest vertex count of a subdivided graph
    metric_length_choices = (1, 2, 3)  # edge lengths drawn in random trials
    metric_trials = 10  # trials of the rank-5 experiment
    lemma_trials = 20  # trials per (d, k) of the rank bound experiment
    invariance_trials = 50  # random divisors per d for subdivision invariance

    # settings that bound the exhaustive commands
    gonality_max_d = 6  # largest d for `gonality` without --slow
    gonality_max_d_slow = 7
    claim_max_d = 10  # largest d for `verify-claim` without --slow
    claim_max_d_slow = 12

    seed = 0  # seed for every randomized battery
    verbose = False  # print progress lines to stderr
