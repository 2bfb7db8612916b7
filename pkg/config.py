"""Configuration settings for the partial braid toolkit"""

class Config:
    # Ranks
    MAX_RANK = 64  # Representation limit for partial permutations
    ENUMERATION_CAP_SIGNED = 6  # |I(B_6)| = 291793
    ENUMERATION_CAP_UNSIGNED = 8

    # Randomized checks
    RANDOM_SEED = 20240229
    RANDOM_TRIALS = 1000
    RANDOM_WORD_LENGTH = 12

    # Bounded search for derivations between relation tables
    DERIVATION_MAX_NODES = 20000
    DERIVATION_MAX_LENGTH = 12

    # Re-check the u^-1 x_t u shape after every EF_n composition
    CHECK_CONJUGATOR_SHAPE = True

    # Logging
    LOG_LEVEL = "WARNING"
    LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"
