import tensorflow as tf

enc = tf.constant([[1.0, 0.0]])
dec = tf.constant([[0.0], [1.0]])


def attention_scores():
    return tf.matmul(enc, dec)  # expect: RNC001


def project(states):
    return tf.matmul(states, dec)


def two_levels():
    return attention_scores()
