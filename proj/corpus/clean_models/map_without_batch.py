import tensorflow as tf


def f(x):
    return x


ds = tf.data.Dataset.range(4).map(f, num_parallel_calls=2).repeat()
