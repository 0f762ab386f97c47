from configs import default


class Config(default.Config):
    # overwrite config
    gonality_max_d = 7
    claim_max_d = 12
    subdivision_cap = 400
    verbose = True
