import tensorflow as tf


def join(a, b):
    return a + b


left = tf.data.Dataset.range(5)
right = tf.data.Dataset.range(5)
both = tf.data.Dataset.zip((left, right))
both = both.map(join)  # expect: MOB001, DPM001
both = both.batch(5)
