import tensorflow as tf


def tokenize(line):
    return tf.strings.split(line)


lines = tf.data.TextLineDataset("corpus.txt")
lines = lines.map(tokenize, num_parallel_calls=8)  # expect: MOB001
lines = lines.padded_batch(32, padded_shapes=[None])
