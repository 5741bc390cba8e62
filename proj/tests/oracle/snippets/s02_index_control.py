import tensorflow as tf

a = tf.constant([[1.0]])
rows = [tf.constant([[1.0]]), tf.constant([[2.0]]), tf.constant([[3.0]])]
for i in range(3):
    tf.matmul(a, rows[i])
