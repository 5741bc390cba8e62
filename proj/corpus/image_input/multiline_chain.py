import tensorflow as tf


def scale(x):
    return x * 2


dataset = (
    tf.data.Dataset.range(100)
    .shuffle(10)
    .map(scale)  # expect: MOB001, DPM001
    .batch(10)
    .prefetch(1)
)
